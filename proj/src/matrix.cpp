#include "lkb/matrix.hpp"

#include <algorithm>

namespace lkb {

RepMatrix::RepMatrix(GroupPtr ring, std::vector<BasisKey> keys)
    : ring_(std::move(ring)), keys_(std::move(keys)) {
  if (!ring_) throw std::invalid_argument("RepMatrix: null ring");
  if (keys_.empty()) throw std::invalid_argument("RepMatrix: empty key set");
  for (int i = 0; i < static_cast<int>(keys_.size()); ++i)
    if (!index_.emplace(keys_[i], i).second)
      throw std::invalid_argument("RepMatrix: duplicate keys");
}

RepMatrix RepMatrix::identity(GroupPtr ring, std::vector<BasisKey> keys) {
  RepMatrix a(std::move(ring), std::move(keys));
  RingElement one = RingElement::one(a.ring_);
  for (int i = 0; i < a.dim(); ++i) a.entries_.emplace(std::make_pair(i, i), one);
  return a;
}

int RepMatrix::key_index(const BasisKey& k) const {
  auto it = index_.find(k);
  return it == index_.end() ? -1 : it->second;
}

void RepMatrix::set(const BasisKey& row, const BasisKey& col,
                    RingElement value) {
  int r = key_index(row), c = key_index(col);
  if (r < 0 || c < 0)
    throw std::invalid_argument("RepMatrix::set: key not in key set");
  if (value.is_zero()) {
    entries_.erase(std::make_pair(r, c));
    return;
  }
  if (!value.ring() || !value.ring()->same_group(*ring_))
    throw std::invalid_argument("RepMatrix::set: entry ring mismatch");
  entries_[std::make_pair(r, c)] = std::move(value);
}

RingElement RepMatrix::at(const BasisKey& row, const BasisKey& col) const {
  int r = key_index(row), c = key_index(col);
  if (r < 0 || c < 0)
    throw std::invalid_argument("RepMatrix::at: key not in key set");
  auto it = entries_.find(std::make_pair(r, c));
  return it == entries_.end() ? RingElement::zero(ring_) : it->second;
}

namespace {

// Index translation other -> self for matrices sharing a key set.
std::vector<int> remap(const RepMatrix& self, const RepMatrix& other) {
  if (self.dim() != other.dim())
    throw std::invalid_argument("matrix key sets differ");
  std::vector<int> to_self(other.dim());
  for (int i = 0; i < other.dim(); ++i) {
    int j = self.key_index(other.keys()[i]);
    if (j < 0) throw std::invalid_argument("matrix key sets differ");
    to_self[i] = j;
  }
  return to_self;
}

}  // namespace

bool RepMatrix::operator==(const RepMatrix& o) const {
  if (!ring_->same_group(*o.ring_))
    throw std::invalid_argument("matrix ring mismatch");
  std::vector<int> to_self = remap(*this, o);
  std::map<std::pair<int, int>, const RingElement*> theirs;
  for (const auto& [rc, e] : o.entries_)
    theirs.emplace(std::make_pair(to_self[rc.first], to_self[rc.second]), &e);
  if (theirs.size() != entries_.size()) return false;
  for (const auto& [rc, e] : entries_) {
    auto it = theirs.find(rc);
    if (it == theirs.end() || !(*it->second == e)) return false;
  }
  return true;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (!a.ring_->same_group(*b.ring_))
    throw std::invalid_argument("matrix ring mismatch");
  std::vector<int> to_a = remap(a, b);
  // b's rows, in a's indexing
  std::vector<std::vector<std::pair<int, const RingElement*>>> rows(a.dim());
  for (const auto& [rc, e] : b.entries_)
    rows[to_a[rc.first]].emplace_back(to_a[rc.second], &e);

  RepMatrix out(a.ring_, a.keys_);
  std::map<std::pair<int, int>, RingElement> acc;
  for (const auto& [rk, ea] : a.entries_) {
    int r = rk.first, k = rk.second;
    for (const auto& [c, eb] : rows[k]) {
      RingElement prod = ea * (*eb);  // left factor from a
      if (prod.is_zero()) continue;
      auto [it, inserted] = acc.emplace(std::make_pair(r, c), prod);
      if (!inserted) {
        RingElement sum = it->second + prod;
        if (sum.is_zero())
          acc.erase(it);
        else
          it->second = std::move(sum);
      }
    }
  }
  out.entries_ = std::move(acc);
  return out;
}

RepMatrix matrix_map(const RingMorphism& phi, const RepMatrix& a) {
  RepMatrix out(phi.group_morphism().target(), a.keys());
  for (const auto& [rc, e] : a.entries()) {
    RingElement img = phi.apply(e);
    if (!img.is_zero())
      out.set(a.keys()[rc.first], a.keys()[rc.second], std::move(img));
  }
  return out;
}

RepMatrix invert_unit_triangular(const RepMatrix& a) {
  const int n = a.dim();
  std::vector<std::vector<int>> col_rows(n);
  std::vector<std::vector<std::pair<int, const RingElement*>>> row_entries(n);
  for (const auto& [rc, e] : a.entries()) {
    col_rows[rc.second].push_back(rc.first);
    row_entries[rc.first].emplace_back(rc.second, &e);
  }

  // Greedy triangular order: a column is eligible once all its nonzero rows
  // are previously selected columns (or itself).
  std::vector<int> order;
  std::vector<bool> selected(n, false);
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    int picked = -1;
    for (int c = 0; c < n && picked < 0; ++c) {
      if (selected[c]) continue;
      bool ok = true;
      for (int r : col_rows[c])
        if (r != c && !selected[r]) {
          ok = false;
          break;
        }
      if (ok) picked = c;
    }
    if (picked < 0) throw NotTriangularizable();
    selected[picked] = true;
    order.push_back(picked);
  }

  // Diagonal units and their inverses.
  std::vector<RingElement> diag_inv(n);
  for (int c = 0; c < n; ++c) {
    auto it = a.entries().find(std::make_pair(c, c));
    if (it == a.entries().end() || it->second.support_size() != 1)
      throw NonUnitDiagonal();
    const auto& [g, coeff] = *it->second.terms().begin();
    if (coeff != 1 && coeff != -1) throw NonUnitDiagonal();
    diag_inv[c] = RingElement::monomial(a.ring(), coeff, a.ring()->inverse(g));
  }

  // Back-substitution over the discovered order: in that order the matrix is
  // upper triangular, so solve A X = I from the bottom row upwards.
  RepMatrix x(a.ring(), a.keys());
  RingElement one = RingElement::one(a.ring());
  for (int j = 0; j < n; ++j) {
    std::map<int, RingElement> xcol;
    for (int idx = n - 1; idx >= 0; --idx) {
      int r = order[idx];
      RingElement s = (r == j) ? one : RingElement::zero(a.ring());
      for (const auto& [k, e] : row_entries[r]) {
        if (k == r) continue;
        auto it = xcol.find(k);
        if (it != xcol.end()) s = s - (*e) * it->second;
      }
      if (s.is_zero()) continue;
      xcol.emplace(r, diag_inv[r] * s);
    }
    for (const auto& [r, e] : xcol) x.set(a.keys()[r], a.keys()[j], e);
  }
  return x;
}

SparseVec matrix_apply(const RepMatrix& a, const SparseVec& v) {
  std::map<int, RingElement> by_index;
  for (const auto& [k, e] : v) {
    int c = a.key_index(k);
    if (c < 0) throw std::invalid_argument("matrix_apply: key not in key set");
    if (!e.is_zero()) by_index.emplace(c, e);
  }
  std::map<int, RingElement> out;
  for (const auto& [rc, e] : a.entries()) {
    auto it = by_index.find(rc.second);
    if (it == by_index.end()) continue;
    RingElement prod = e * it->second;
    if (prod.is_zero()) continue;
    auto [oit, inserted] = out.emplace(rc.first, prod);
    if (!inserted) {
      RingElement sum = oit->second + prod;
      if (sum.is_zero())
        out.erase(oit);
      else
        oit->second = std::move(sum);
    }
  }
  SparseVec result;
  for (const auto& [r, e] : out) result.emplace(a.keys()[r], e);
  return result;
}

}  // namespace lkb
