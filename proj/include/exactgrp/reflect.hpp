#pragma once

#include "exactgrp/group.hpp"
#include "exactgrp/report.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace exactgrp {

struct ZeroRoot : std::invalid_argument {
  ZeroRoot() : std::invalid_argument("reflection root is zero") {}
};

struct ReflectionData {
  RowVector<CycNum> root;  // first nonzero coordinate 1
  CycNum lambda;
  CycMatrix matrix;
  int element = -1;  // index in the scanned group
};

struct Mirror {
  RowVector<CycNum> root;
  std::vector<ReflectionData> reflections;  // sorted by eigenvalue key
};

struct MirrorSet {
  std::vector<Mirror> mirrors;  // sorted by root key
  int identity_count = 0;
  int other_count = 0;  // rank(M - I) > 1
  int reflection_count() const;
};

// classify every element by rank(M - I); column-vector convention
MirrorSet reflection_scan(FinMatGroup const &g);

// x -> x - (x.r)/(r.r) (1 - lambda) r with x.r = sum x_i conj(r_i), on column vectors
CycMatrix build_complex_reflection(RowVector<CycNum> const &r, CycNum const &lambda);
// same formula on quaternionic row vectors with scalars on the left: x -> x M
QuatMatrix build_quaternionic_reflection(RowVector<QuatNum> const &r, QuatNum const &lambda);

// coordinates of an element of Q(v) in the basis 1, v; throws if i is involved
std::array<Rational, 2> eisenstein_coords(CycNum const &x);

struct E6Data {
  std::vector<std::vector<Rational>> lines;  // first nonzero coordinate 1, sorted
  std::vector<CycMatrix> reflections;        // rational 6x6, column-vector convention
  FinMatGroup group;
};
// each root (scaled to Hermitian norm 3) times 1, v, w, over the basis {1, v} per coordinate; reflections for the
// real part of the Hermitian form; closes with max_order 60000
E6Data realify_to_e6(std::vector<RowVector<CycNum>> const &roots, int jobs = 1);

// the four roots (t,0,0), (1,1,1), (v,1,1), (w,1,1): 24 elements, fixing (0,1,-1)
CheckReport top_row_check(MirrorSet const &m);

}  // namespace exactgrp
