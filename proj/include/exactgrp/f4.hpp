#pragma once

#include "exactgrp/group.hpp"
#include "exactgrp/report.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactgrp {

struct NotEisensteinIntegral : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Field of order 4 as 0, 1, v = 2, w = 3; addition is xor in the basis {1, v}.
namespace f4 {
using Elt = uint8_t;
Elt add(Elt a, Elt b);
Elt mul(Elt a, Elt b);
Elt conj(Elt a);  // a^2
Elt inv(Elt a);
char name(Elt a);  // '0', '1', 'v', 'w'

using Vec = std::array<Elt, 3>;
using Mat = std::array<Elt, 9>;  // row major
Elt herm(Vec const &x, Vec const &y);  // sum x_i y_i^2
Vec canonical(Vec x);                  // first nonzero coordinate 1
Vec apply(Mat const &m, Vec const &x);  // column-vector action
Mat mul(Mat const &a, Mat const &b);
bool is_unitary(Mat const &m);
std::string name(Vec const &x);  // "v11"
Vec parse(std::string const &s);
}  // namespace f4

// Field of order 9 as a + b i with i^2 = -1, encoded a + 3b.
namespace f9 {
using Elt = uint8_t;
Elt add(Elt a, Elt b);
Elt mul(Elt a, Elt b);
Elt conj(Elt a);  // a^3
using Mat = std::array<Elt, 4>;
Mat mul(Mat const &a, Mat const &b);
}  // namespace f9

struct ProjPoint {
  f4::Vec x;
  bool singular = false;
  std::string name() const { return f4::name(x); }
};

struct PointClasses {
  std::vector<ProjPoint> nonsingular, singular;  // sorted by coordinates
};
PointClasses classify_points();

struct LineProfile {
  ProjPoint pole;  // the line is the perpendicular of this point
  int nonsingular = 0, singular = 0;
  bool contains_pole = false;
};
std::vector<LineProfile> line_profile();

// ring map Z[1/3][v] -> F4 with 2 -> 0; t reduces to 1
f4::Elt reduce_mod2(CycNum const &x);
ProjPoint reduce_mod2(RowVector<CycNum> const &x);
f4::Mat reduce_mod2(CycMatrix const &m);

// brute force over all 4^9 (resp. 4, 9^4) matrices
std::vector<f4::Mat> build_u3f4();
std::vector<f4::Elt> build_u1f4();
std::vector<f9::Mat> build_su2f9();
std::vector<f4::Mat> f4_closure(std::vector<f4::Mat> const &gens);
CayleyGroup su2f9_group();

// printed arrangement: twelve nonsingular points in four columns of three, nine singular
struct PointArrangement {
  std::array<std::array<std::string, 4>, 3> nonsingular;
  std::array<std::array<std::string, 3>, 3> singular;
};
PointArrangement point_arrangement();

// point counts, line profiles, mirror reduction, unitary group orders, quotient chain;
// g648 must be the closure of the catalog entry, btg the binary tetrahedral closure
CheckReport f4_geometry_checks(FinMatGroup const &g648, CayleyGroup const &btg);
CheckReport quotient_chain_check(CayleyGroup const &g648, CayleyGroup const &btg);

}  // namespace exactgrp
