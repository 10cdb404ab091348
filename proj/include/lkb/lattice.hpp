#pragma once

#include <vector>

namespace lkb {

using Coord = long long;
using Vec = std::vector<Coord>;
using IMat = std::vector<Vec>;  // row-major integer matrix

// Floor division (remainder has the sign of the divisor).
Coord floor_div(Coord a, Coord b);

IMat identity_matrix(int m);
Vec mat_vec(const IMat& a, const Vec& v);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_pow(const IMat& a, Coord e);  // e >= 0
Coord imat_det(const IMat& a);
// Inverse of an integer matrix with determinant +-1.
IMat imat_inverse_unimodular(const IMat& a);

// A sublattice of Z^m stored as its column Hermite form: columns are ordered
// by pivot row, pivots are positive, each pivot column has zeros above its
// pivot, and entries to the left of a pivot (same row) lie in [0, pivot).
// This form is unique per sublattice, so equality of lattices is equality
// of the stored columns.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int m, const std::vector<Vec>& generators);

  int ambient_rank() const { return m_; }
  const std::vector<Vec>& columns() const { return cols_; }
  const std::vector<int>& pivot_rows() const { return pivots_; }
  bool is_trivial() const { return cols_.empty(); }

  // Canonical coset representative: every pivot coordinate lands in
  // [0, pivot). Idempotent.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  bool operator==(const Lattice& o) const {
    return m_ == o.m_ && cols_ == o.cols_;
  }

 private:
  int m_ = 0;
  std::vector<Vec> cols_;
  std::vector<int> pivots_;
};

}  // namespace lkb
