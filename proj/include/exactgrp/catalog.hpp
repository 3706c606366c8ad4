#pragma once

#include "exactgrp/group.hpp"
#include "exactgrp/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactgrp {

struct UnknownName : std::out_of_range {
  explicit UnknownName(std::string const &n) : std::out_of_range("unknown catalog name: " + n) {}
};

enum class EntryKind { Matrix, Group, Vectors };

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Matrix;
  Domain domain = Domain::Cyc;
  int dim = 0;
  std::vector<CycMatrix> cyc;   // generators (Matrix: exactly one)
  std::vector<QuatMatrix> quat;
  std::vector<std::string> generator_names;
  std::vector<RowVector<CycNum>> cyc_vectors;
  std::vector<RowVector<QuatNum>> quat_vectors;
  std::string anchor;  // short description of where the object comes from
  std::optional<long> expected_order;
  bool central_quotient = false;  // group is closure / centre
  bool hermitian_basis = false;   // not expected to be unitary
};

namespace catalog {

CatalogEntry const &get(std::string const &name);
std::vector<std::string> names(std::optional<EntryKind> kind = std::nullopt);

CycMatrix const &cyc(std::string const &name);
QuatMatrix const &quat(std::string const &name);

// the literal catalog text and its FNV-1a 64 digest
std::string const &source_text();
std::string checksum();

// orthonormal unitary replacement of the Gell-Mann basis
CheckReport gluon_basis_check();
// the Q8 / Z3 relations, G27 commutators and the permutation/diagonal intertwining identity
CheckReport semidirect_relation_check();

}  // namespace catalog
}  // namespace exactgrp
