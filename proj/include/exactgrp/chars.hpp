#pragma once

#include "exactgrp/group.hpp"
#include "exactgrp/report.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactgrp {

struct NotAHomomorphism : std::invalid_argument {
  NotAHomomorphism() : std::invalid_argument("generator images do not define a homomorphism") {}
};
struct SaturationStalled : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoMatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DecompositionResidual : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite group together with its class data; characters are indexed by its classes.
struct ClassedGroup {
  std::shared_ptr<CayleyGroup const> group;
  ClassInfo classes;

  static ClassedGroup of(std::shared_ptr<CayleyGroup const> g);
  static ClassedGroup of(CayleyGroup g) { return of(std::make_shared<CayleyGroup const>(std::move(g))); }
  int order() const { return group->order(); }
  int count() const { return classes.count(); }
  std::vector<int> const &power_map(int k) const;  // cached class map of x -> x^k

private:
  mutable std::shared_ptr<std::vector<std::pair<int, std::vector<int>>>> powers_ =
      std::make_shared<std::vector<std::pair<int, std::vector<int>>>>();
};

struct Character {
  std::vector<CycNum> values;
  CycNum const &degree() const { return values[0]; }
  friend bool operator==(Character const &a, Character const &b) { return a.values == b.values; }
  friend bool operator!=(Character const &a, Character const &b) { return !(a == b); }
  Character operator-() const;
  friend Character operator+(Character const &a, Character const &b);
  friend Character operator-(Character const &a, Character const &b);
  friend Character operator*(CycNum const &s, Character const &a);
  std::string key() const;
};

Character trivial_character(ClassedGroup const &g);
// traces of class representatives; cg must come from fm.cayley()
Character natural_character(FinMatGroup const &fm, ClassedGroup const &cg);
// character of the representation sending generator k of fm to images[k]
Character hom_character(FinMatGroup const &fm, ClassedGroup const &cg, std::vector<CycMatrix> const &images);
Character hom_character(FinMatGroup const &fm, ClassedGroup const &cg, std::vector<QuatMatrix> const &images);
// chi o phi for phi : G -> H given on elements
Character pullback(ClassedGroup const &g, std::vector<int> const &phi, ClassedGroup const &h, Character const &chi);

CycNum inner_product(ClassedGroup const &g, Character const &a, Character const &b);
Character tensor(Character const &a, Character const &b);
Character conj(Character const &a);
Character galois(Character const &a, int k);
Character alt2(ClassedGroup const &g, Character const &a);
Character sym2(ClassedGroup const &g, Character const &a);

// embed[k] is the G-index of element k of H
Character induce(ClassedGroup const &g, std::vector<int> const &embed, ClassedGroup const &h, Character const &chi);
Character restrict(ClassedGroup const &g, Character const &chi, std::vector<int> const &embed, ClassedGroup const &h);

// homomorphisms to the 12th roots of unity, through the abelianization
std::vector<Character> linear_characters(ClassedGroup const &g);

struct CharTable {
  ClassedGroup group;
  std::vector<Character> irr;
  std::vector<std::string> labels;  // filled by table matching, else "X1", "X2", ...
  int index_of(std::string const &label) const;
  Character const &operator[](std::string const &label) const { return irr.at(index_of(label)); }
};

// tensor-power saturation from the seeds; rows sorted by (degree, value keys)
CharTable build_char_table(ClassedGroup const &g, std::vector<Character> const &seeds);

struct Decomposition {
  std::vector<CycNum> multiplicity;  // per irreducible
  Character residual;
  bool exact() const;
  std::string pretty(CharTable const &t) const;
};
Decomposition decompose(CharTable const &t, Character const &chi);
// constituents repeated by multiplicity and sorted by label, e.g. "1a+3a+8a+8a"; "+residual" when inexact
std::string constituents(CharTable const &t, Decomposition const &d);

CheckReport orthogonality_report(CharTable const &t);

// ------------------------------------------------------------ reference tables

struct RefTable {
  std::string name;
  std::vector<std::string> row_labels;
  std::vector<std::vector<CycNum>> rows;
  std::vector<int> col_sizes;  // 0 when the reference does not state a size
};

RefTable btg_reference();
RefTable hessian_reference();
// lifted Hessian rows, the seven faithful rows and their conjugates, on one class above each Hessian class.
// as_printed keeps the published signs on the order-4 column, which no faithful character attains.
RefTable quark_reference(bool as_printed = false);

struct MatchOptions {
  // per reference column: allowed computed classes (empty: any)
  std::vector<std::vector<int>> candidates;
  // computed class -> block id; chosen classes must lie in distinct blocks (empty: no constraint)
  std::vector<int> block_of;
  // computed row that must receive the given reference label
  std::vector<std::pair<int, std::string>> pins;
  // column j follows an earlier column: class(j) = link_map[j][class(link_base[j])]; -1 when free
  std::vector<int> link_base;
  std::vector<std::vector<int>> link_map;
};

struct MatchResult {
  int twist = 1;                 // Galois exponent applied to the reference (1 or 11)
  std::vector<int> col_map;      // reference column -> computed class
  std::vector<int> row_of_ref;   // reference row -> computed row
  bool ambiguous = false;        // two computed rows agree on the matched columns
};

// throws NoMatch naming the first column that cannot be placed
MatchResult table_match(CharTable const &t, RefTable const &ref, MatchOptions const &opt = {});
// copy reference labels onto the matched rows
void apply_labels(CharTable &t, RefTable const &ref, MatchResult const &m);

// 2a x 2a = 1a + 3a, 3b x conj(3b) = 1a + 8a, faithful rows = 3b x lifted rows
CheckReport verify_tensor_relations(CharTable const &t);

// ------------------------------------------------------------ export

struct ClassMeta {
  int elem_order = 0;
  int size = 0;
  long centralizer = 0;
  std::string word;  // representative as a generator word, when known
};
// words use gen_names when given, else g1, g2, ...; identity is "1"
std::vector<ClassMeta> class_metadata(CharTable const &t, FinMatGroup const *fm = nullptr,
                                      std::vector<std::string> const &gen_names = {});
std::string table_json(CharTable const &t, std::vector<ClassMeta> const &meta);
std::string table_text(CharTable const &t, std::vector<ClassMeta> const &meta);

}  // namespace exactgrp
