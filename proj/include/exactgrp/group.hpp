#pragma once

#include "exactgrp/matrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactgrp {

struct OrderExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNormal : std::invalid_argument {
  NotNormal() : std::invalid_argument("subgroup is not normal") {}
};
struct ElementNotInAmbient : std::invalid_argument {
  ElementNotInAmbient() : std::invalid_argument("element not in ambient group") {}
};
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ abstract groups

// Finite group given by its multiplication table. Element 0 is the identity.
class CayleyGroup {
public:
  CayleyGroup() = default;
  CayleyGroup(int n, std::vector<int32_t> table);
  static CayleyGroup from_mul(int n, std::function<int(int, int)> const &mul);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return ord_[a]; }
  int power(int a, long k) const;
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

private:
  int n_ = 0;
  std::vector<int32_t> table_;
  std::vector<int> inv_, ord_;
};

using Subgroup = std::vector<int>;  // sorted element indices

struct ConjClass {
  int rep = 0;
  std::vector<int> members;
  int size = 0;
  long centralizer = 0;
  int elem_order = 1;
};

struct ClassInfo {
  std::vector<ConjClass> classes;
  std::vector<int> class_of;
  int count() const { return static_cast<int>(classes.size()); }
};

// ordered by (element order, class size, least member index)
ClassInfo conjugacy_classes(CayleyGroup const &g);

Subgroup subgroup_closure(CayleyGroup const &g, std::vector<int> const &gens);
Subgroup center(CayleyGroup const &g);
Subgroup commutator_subgroup(CayleyGroup const &g);
Subgroup centralizer_of(CayleyGroup const &g, std::vector<int> const &set);
bool is_subgroup(CayleyGroup const &g, Subgroup const &h);
bool is_normal(CayleyGroup const &g, Subgroup const &h);
Subgroup whole(CayleyGroup const &g);
std::vector<int> small_generating_set(CayleyGroup const &g);

// every normal subgroup; ordered by (order, element list)
std::vector<Subgroup> normal_subgroups(CayleyGroup const &g, ClassInfo const &ci);

struct QuotientGroup {
  CayleyGroup group;
  std::vector<int> coset_of;  // element of G -> coset index
  std::vector<int> reps;      // least element of each coset
};
QuotientGroup quotient(CayleyGroup const &g, Subgroup const &n);

// subgroup as a group in its own right; embed[k] is the parent index of element k
CayleyGroup subgroup_group(CayleyGroup const &g, Subgroup const &h, std::vector<int> *embed = nullptr);

// returns phi with phi[x] the image of x, if an isomorphism exists
std::optional<std::vector<int>> find_isomorphism(CayleyGroup const &g, CayleyGroup const &h);
// capped at order 256
bool is_isomorphic(CayleyGroup const &g, CayleyGroup const &h);
bool is_isomorphism(CayleyGroup const &g, CayleyGroup const &h, std::vector<int> const &phi);

std::vector<int> power_class_map(CayleyGroup const &g, ClassInfo const &ci, long k);

struct GroupReport {
  long order = 0;
  long exponent = 0;
  long center_order = 0;
  long commutator_order = 0;
  bool abelian = false;
  bool extraspecial = false;
  int central_quotient_rank = -1;  // when G/Z is elementary abelian
  std::map<int, int> order_histogram;
};
GroupReport group_report(CayleyGroup const &g);

// number of distinct sets g^-1 H g for g in acting
int conjugation_orbit_count(std::vector<int> const &acting, std::vector<int> const &h,
                            std::function<int(int, int)> const &mul, std::function<int(int)> const &inv);

CayleyGroup perm_group(std::vector<std::vector<int>> const &gens);
CayleyGroup cyclic_group(int n);
CayleyGroup direct_product(CayleyGroup const &a, CayleyGroup const &b);

// ------------------------------------------------------------ matrix groups

enum class Domain { Cyc, Quat };

struct ClosureOptions {
  long max_order = 0;  // 0: domain default (1000 cyclotomic, 100000 quaternionic)
  int jobs = 1;
};

class FinMatGroup {
public:
  static FinMatGroup closure(std::vector<CycMatrix> const &gens, ClosureOptions opt = {});
  static FinMatGroup closure(std::vector<QuatMatrix> const &gens, ClosureOptions opt = {});

  Domain domain() const { return dom_; }
  int dim() const { return n_; }
  int order() const { return static_cast<int>(parent_.size()); }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  CycMatrix cyc(int i) const;
  QuatMatrix quat(int i) const;
  std::string key(int i) const;
  std::pair<int, int> word(int i) const { return {parent_[i], gen_[i]}; }
  std::vector<int> word_path(int i) const;  // generator indices, identity first

  int index_of(CycMatrix const &m) const;
  int index_of(QuatMatrix const &m) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int power(int a, long k) const;
  int times_generator(int i, int s) const;  // element i times generator s

  // full multiplication table; throws OrderExceeded above 20000 elements
  std::shared_ptr<CayleyGroup const> cayley() const;

  // complex trace: cyclotomic trace, or 2 Re(trace) for quaternionic matrices
  CycNum complex_trace(int i) const;

  std::string fingerprint() const { return fingerprint_; }
  static std::string fingerprint_of(std::vector<CycMatrix> const &gens);
  static std::string fingerprint_of(std::vector<QuatMatrix> const &gens);

  void save(std::string const &path) const;
  static FinMatGroup load(std::string const &path, std::vector<CycMatrix> const &gens);
  static FinMatGroup load(std::string const &path, std::vector<QuatMatrix> const &gens);

  struct Impl;

private:
  Domain dom_ = Domain::Cyc;
  int n_ = 0;
  int nc_ = 4;  // coordinates stored per entry
  long den_ = 1;
  std::vector<std::vector<int32_t>> gens_;
  std::vector<int32_t> data_;
  std::vector<int> parent_, gen_;
  std::vector<int32_t> slots_;
  std::string fingerprint_;
  mutable std::shared_ptr<CayleyGroup const> table_;
  mutable std::shared_ptr<std::mutex> table_mu_ = std::make_shared<std::mutex>();

  friend struct Impl;
};

}  // namespace exactgrp
