#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lkb/ring.hpp"

namespace lkb {

using BasisKey = std::vector<int>;

struct NotTriangularizable : std::runtime_error {
  NotTriangularizable()
      : std::runtime_error("matrix admits no unit-triangular ordering") {}
};

struct NonUnitDiagonal : std::runtime_error {
  NonUnitDiagonal()
      : std::runtime_error("triangular pivot is not +-(group element)") {}
};

// Sparse square matrix over a group ring, addressed by basis keys rather
// than positions. The stored key order is the serialization order; all
// arithmetic matches entries by key. Zero entries are never stored.
class RepMatrix {
 public:
  RepMatrix(GroupPtr ring, std::vector<BasisKey> keys);
  static RepMatrix identity(GroupPtr ring, std::vector<BasisKey> keys);

  const GroupPtr& ring() const { return ring_; }
  const std::vector<BasisKey>& keys() const { return keys_; }
  int dim() const { return static_cast<int>(keys_.size()); }
  int key_index(const BasisKey& k) const;  // -1 when absent

  void set(const BasisKey& row, const BasisKey& col, RingElement value);
  RingElement at(const BasisKey& row, const BasisKey& col) const;
  // Entries keyed by (row index, col index) in stored key order.
  const std::map<std::pair<int, int>, RingElement>& entries() const {
    return entries_;
  }

  bool operator==(const RepMatrix& o) const;
  bool operator!=(const RepMatrix& o) const { return !(*this == o); }
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);

 private:
  GroupPtr ring_;
  std::vector<BasisKey> keys_;
  std::map<BasisKey, int> index_;
  std::map<std::pair<int, int>, RingElement> entries_;
};

// Entrywise application of a ring morphism; multiplicative and unital.
RepMatrix matrix_map(const RingMorphism& phi, const RepMatrix& a);

// Two-sided inverse of a matrix that is triangular under some ordering of
// its keys with each diagonal entry a unit +-g. The ordering is discovered
// greedily; back-substitution clears each column by left-multiplying with
// the inverse of the diagonal unit.
RepMatrix invert_unit_triangular(const RepMatrix& a);

using SparseVec = std::map<BasisKey, RingElement>;
SparseVec matrix_apply(const RepMatrix& a, const SparseVec& v);

}  // namespace lkb
