#pragma once

#include "exactgrp/chars.hpp"
#include "exactgrp/group.hpp"
#include "exactgrp/report.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactgrp {

class GroupStore;

struct NotCliffordSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::invalid_argument {
  NotInvertible() : std::invalid_argument("matrix is not invertible") {}
};

struct NamedGamma {
  std::string name;
  QuatMatrix matrix;
};

// textbook Bjorken-Drell gamma0..gamma3, gamma5 = i gamma0 gamma1 gamma2 gamma3
std::vector<NamedGamma> bjorken_drell_gammas();
// gamma0..gamma3 as -i times the real catalog matrices igamma0_real, igamma1..3, then the catalog gamma5
std::vector<NamedGamma> real_basis_gammas();
NamedGamma const &find_gamma(std::vector<NamedGamma> const &set, std::string const &name);

struct CliffordSignature {
  int plus = 0, minus = 0;  // generators squaring to +I, -I
  std::string name() const { return "Cl(" + std::to_string(plus) + "," + std::to_string(minus) + ")"; }
  friend bool operator==(CliffordSignature const &, CliffordSignature const &) = default;
};
CliffordSignature clifford_signature(std::vector<QuatMatrix> const &gens);

QuatMatrix quat_inverse(QuatMatrix const &m);

// g^-1 m g
QuatMatrix conjugate_action(QuatMatrix const &g, QuatMatrix const &m);

// Product with entries multiplied in reverse order, (a.b)_rc = sum b_kc a_rk, as for columns with
// scalars on the left. Not a convention for the whole group: some Gell-Mann matrices are singular in it.
QuatMatrix column_mul(QuatMatrix const &a, QuatMatrix const &b);
QuatMatrix column_inverse(QuatMatrix const &m);  // throws NotInvertible
QuatMatrix column_conjugate(QuatMatrix const &g, QuatMatrix const &m);
// images of a set, as sorted keys
std::vector<std::string> conjugate_set_key(QuatMatrix const &g, std::vector<QuatMatrix> const &set);

struct E128Census {
  int q8_subgroups = 0;
  int factorizations = 0;          // unordered commuting triples generating the group
  int commuting_involutions = 0;   // up to sign, centralizing the fixed Q8
  int anticommuting_partners = 0;  // for the first of those
};
// fixed_q8: generators of a Q8 inside e128
E128Census e128_census(FinMatGroup const &e128, std::vector<QuatMatrix> const &fixed_q8);

// the three column copies of Q8 in the six E128 generators
std::array<std::vector<QuatMatrix>, 3> e128_columns();
std::vector<QuatMatrix> spin_q8();  // gamma1 gamma2, gamma2 gamma3
CheckReport column_triple_check(FinMatGroup const &e128);

// isospin images of the first generator row and the two colourless gluon displays
CheckReport conjugation_display_check();
CheckReport clifford_check();
CheckReport named_product_check();
// real Gell-Mann generators fix each column subgroup, some Pauli generator moves one
CheckReport column_preservation_check();
CheckReport center_action_check();

// distinct images g^-1 H g, g over acting
int conjugation_orbit_count(FinMatGroup const &acting, std::vector<QuatMatrix> const &h);
CheckReport combined_group_checks(FinMatGroup const &combined, FinMatGroup const &e128, FinMatGroup const &q648);
// conjugation respects products on pseudo-random triples of the combined group
CheckReport automorphism_check(FinMatGroup const &combined, int trials = 50, unsigned seed = 12345);

struct SpinorCharacter {
  Character character;          // on the classes of the g648 table
  std::string untwisted;        // decomposition through the isomorphism found first
  std::string decomposition;    // after the central twist
  std::string twist;            // label of the linear character in x -> x z^k(x), empty for none
  bool exact = false;
};
// complex trace of q648 on H^4 under left multiplication by i, pulled back to the labelled g648 table
SpinorCharacter spinor_character(GroupStore &store);

}  // namespace exactgrp
