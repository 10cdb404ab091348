#include "lkb/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lkb {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IMat identity_matrix(int m) {
  IMat e(m, Vec(m, 0));
  for (int i = 0; i < m; ++i) e[i][i] = 1;
  return e;
}

Vec mat_vec(const IMat& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != v.size())
      throw std::invalid_argument("mat_vec: dimension mismatch");
    Coord s = 0;
    for (size_t c = 0; c < v.size(); ++c) s += a[r][c] * v[c];
    out[r] = s;
  }
  return out;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  IMat out(n, Vec(p, 0));
  for (size_t r = 0; r < n; ++r) {
    if (a[r].size() != k) throw std::invalid_argument("imat_mul: shape");
    for (size_t j = 0; j < k; ++j) {
      Coord x = a[r][j];
      if (x == 0) continue;
      for (size_t c = 0; c < p; ++c) out[r][c] += x * b[j][c];
    }
  }
  return out;
}

IMat imat_pow(const IMat& a, Coord e) {
  if (e < 0) throw std::invalid_argument("imat_pow: negative exponent");
  IMat acc = identity_matrix(static_cast<int>(a.size()));
  IMat base = a;
  while (e > 0) {
    if (e & 1) acc = imat_mul(acc, base);
    e >>= 1;
    if (e) base = imat_mul(base, base);
  }
  return acc;
}

namespace {

Coord det_rec(const IMat& a, std::vector<int>& cols, int row) {
  int m = static_cast<int>(a.size());
  if (row == m) return 1;
  Coord s = 0;
  for (size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    if (a[row][c] == 0) continue;
    cols.erase(cols.begin() + static_cast<long>(k));
    Coord sub = det_rec(a, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    Coord sgn = (k % 2 == 0) ? 1 : -1;
    s += sgn * a[row][c] * sub;
  }
  return s;
}

}  // namespace

Coord imat_det(const IMat& a) {
  int m = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("imat_det: not square");
  std::vector<int> cols(m);
  for (int i = 0; i < m; ++i) cols[i] = i;
  return det_rec(a, cols, 0);
}

IMat imat_inverse_unimodular(const IMat& a) {
  Coord d = imat_det(a);
  if (d != 1 && d != -1)
    throw std::invalid_argument("matrix is not unimodular");
  int m = static_cast<int>(a.size());
  IMat inv(m, Vec(m, 0));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      // cofactor C(c, r), transposed into (r, c)
      IMat minor;
      minor.reserve(static_cast<size_t>(m) - 1);
      for (int i = 0; i < m; ++i) {
        if (i == c) continue;
        Vec row;
        row.reserve(static_cast<size_t>(m) - 1);
        for (int j = 0; j < m; ++j)
          if (j != r) row.push_back(a[i][j]);
        minor.push_back(std::move(row));
      }
      Coord cof = minor.empty() ? 1 : imat_det(minor);
      Coord sgn = ((r + c) % 2 == 0) ? 1 : -1;
      inv[r][c] = d * sgn * cof;
    }
  }
  return inv;
}

Lattice::Lattice(int m, const std::vector<Vec>& generators) : m_(m) {
  if (m <= 0) throw std::invalid_argument("Lattice: rank must be positive");
  std::vector<Vec> w = generators;
  for (const auto& g : w)
    if (static_cast<int>(g.size()) != m)
      throw std::invalid_argument("Lattice: generator length mismatch");

  auto axpy = [m](Vec& dst, Coord q, const Vec& src) {
    for (int i = 0; i < m; ++i) dst[i] += q * src[i];
  };

  size_t jc = 0;
  for (int r = 0; r < m && jc < w.size(); ++r) {
    // Euclidean sweep: leave a single nonzero in row r among columns >= jc.
    while (true) {
      size_t best = w.size();
      for (size_t j = jc; j < w.size(); ++j)
        if (w[j][r] != 0 &&
            (best == w.size() || std::llabs(w[j][r]) < std::llabs(w[best][r])))
          best = j;
      if (best == w.size()) break;
      std::swap(w[jc], w[best]);
      bool leftover = false;
      for (size_t j = jc + 1; j < w.size(); ++j) {
        if (w[j][r] == 0) continue;
        Coord q = floor_div(w[j][r], w[jc][r]);
        if (q != 0) axpy(w[j], -q, w[jc]);
        if (w[j][r] != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (w[jc][r] != 0) {
      if (w[jc][r] < 0)
        for (int i = 0; i < m; ++i) w[jc][i] = -w[jc][i];
      // Canonicity: entries left of the pivot reduced into [0, pivot).
      for (size_t j = 0; j < jc; ++j) {
        Coord q = floor_div(w[j][r], w[jc][r]);
        if (q != 0) axpy(w[j], -q, w[jc]);
      }
      pivots_.push_back(r);
      ++jc;
    }
  }
  w.resize(jc);  // remaining columns are zero
  cols_ = std::move(w);
}

Vec Lattice::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != m_)
    throw std::invalid_argument("Lattice::reduce: vector length mismatch");
  for (size_t j = 0; j < cols_.size(); ++j) {
    int r = pivots_[j];
    Coord q = floor_div(v[r], cols_[j][r]);
    if (q != 0)
      for (int i = 0; i < m_; ++i) v[i] -= q * cols_[j][i];
  }
  return v;
}

bool Lattice::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (Coord x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace lkb
