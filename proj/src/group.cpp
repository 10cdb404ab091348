#include "lkb/group.hpp"

#include <stdexcept>

namespace lkb {

namespace {

Coord floor_mod(Coord a, Coord b) { return a - b * floor_div(a, b); }

bool is_identity(const IMat& a) {
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c] != (r == c ? 1 : 0)) return false;
  return true;
}

}  // namespace

GroupPtr make_group(int m, const std::vector<Vec>& lattice_generators,
                    const IMat& action, Coord twist_modulus) {
  if (m <= 0) throw std::invalid_argument("make_group: rank must be positive");
  if (static_cast<int>(action.size()) != m)
    throw std::invalid_argument("make_group: action must be m x m");
  for (const auto& row : action)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("make_group: action must be m x m");
  for (const auto& g : lattice_generators)
    if (static_cast<int>(g.size()) != m)
      throw std::invalid_argument("make_group: lattice generator length mismatch");
  if (twist_modulus < 0)
    throw std::invalid_argument("make_group: twist modulus must be >= 0");

  Coord det = imat_det(action);
  if (det != 1 && det != -1)
    throw std::invalid_argument("make_group: action matrix is not unimodular");

  auto g = std::shared_ptr<GroupDescriptor>(new GroupDescriptor());
  g->m_ = m;
  g->d_ = twist_modulus;
  g->action_ = action;
  g->action_inv_ = imat_inverse_unimodular(action);
  g->lattice_ = Lattice(m, lattice_generators);

  // M must permute the lattice: M L = L.
  std::vector<Vec> mapped;
  for (const auto& col : g->lattice_.columns())
    mapped.push_back(mat_vec(action, col));
  if (!(Lattice(m, mapped) == g->lattice_))
    throw std::invalid_argument("make_group: action does not preserve the lattice");

  if (twist_modulus > 0) {
    IMat p = imat_pow(action, twist_modulus);
    for (int i = 0; i < m; ++i) {
      Vec e(m, 0);
      e[i] = 1;
      Vec diff = mat_vec(p, e);
      diff[i] -= 1;
      if (!g->lattice_.contains(diff))
        throw std::invalid_argument(
            "make_group: action^d is not the identity modulo the lattice");
    }
  }

  // Small multiplicative orders (all the shipped actions have order 1 or 2)
  // let twist_power avoid matrix powers.
  IMat p = action;
  for (int k = 1; k <= 24; ++k) {
    if (is_identity(p)) {
      g->action_order_ = k;
      break;
    }
    p = imat_mul(p, action);
  }
  return g;
}

GroupElement GroupDescriptor::normalize(Vec v, Coord c) const {
  if (static_cast<int>(v.size()) != m_)
    throw std::invalid_argument("normalize: vector length mismatch");
  if (d_ > 0) c = floor_mod(c, d_);
  return GroupElement{lattice_.reduce(std::move(v)), c};
}

Vec GroupDescriptor::twist_power(const Vec& v, Coord c) const {
  Coord e = c;
  if (action_order_ > 0) e = floor_mod(e, action_order_);
  if (e == 0) return v;
  if (e > 0 && e <= 24) {
    Vec out = v;
    for (Coord k = 0; k < e; ++k) out = mat_vec(action_, out);
    return out;
  }
  const IMat& base = (e > 0) ? action_ : action_inv_;
  Coord a = (e > 0) ? e : -e;
  return mat_vec(imat_pow(base, a), v);
}

GroupElement GroupDescriptor::mul(const GroupElement& a,
                                  const GroupElement& b) const {
  Vec v = twist_power(b.v, a.c);
  for (int i = 0; i < m_; ++i) v[i] += a.v[i];
  return normalize(std::move(v), a.c + b.c);
}

GroupElement GroupDescriptor::inverse(const GroupElement& a) const {
  Vec v = twist_power(a.v, -a.c);
  for (int i = 0; i < m_; ++i) v[i] = -v[i];
  return normalize(std::move(v), -a.c);
}

bool GroupDescriptor::same_group(const GroupDescriptor& o) const {
  return m_ == o.m_ && d_ == o.d_ && action_ == o.action_ &&
         lattice_ == o.lattice_;
}

GroupMorphism::GroupMorphism(GroupPtr source, GroupPtr target, IMat lattice_map,
                             Coord twist_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      lattice_map_(std::move(lattice_map)),
      twist_map_(twist_map) {
  if (!source_ || !target_)
    throw std::invalid_argument("GroupMorphism: null group");
  int ms = source_->rank(), mt = target_->rank();
  if (static_cast<int>(lattice_map_.size()) != mt)
    throw std::invalid_argument("GroupMorphism: lattice map must be m_t x m_s");
  for (const auto& row : lattice_map_)
    if (static_cast<int>(row.size()) != ms)
      throw std::invalid_argument("GroupMorphism: lattice map must be m_t x m_s");

  // L_source must land in L_target.
  for (const auto& col : source_->lattice().columns())
    if (!target_->lattice().contains(mat_vec(lattice_map_, col)))
      throw std::invalid_argument(
          "GroupMorphism: lattice map does not send source lattice into target lattice");

  // Equivariance: A M_s == M_t^w A modulo L_target, checked on basis vectors.
  for (int i = 0; i < ms; ++i) {
    Vec e(ms, 0);
    e[i] = 1;
    Vec lhs = mat_vec(lattice_map_, mat_vec(source_->action(), e));
    Vec rhs = target_->twist_power(mat_vec(lattice_map_, e), twist_map_);
    for (int j = 0; j < mt; ++j) lhs[j] -= rhs[j];
    if (!target_->lattice().contains(lhs))
      throw std::invalid_argument("GroupMorphism: not equivariant");
  }

  // The twist exponent map Z_{d_s} -> Z_{d_t} must be well defined.
  Coord ds = source_->twist_modulus(), dt = target_->twist_modulus();
  if (ds > 0) {
    if (dt == 0 && twist_map_ != 0)
      throw std::invalid_argument("GroupMorphism: twist map not well defined");
    if (dt > 0 && floor_mod(twist_map_ * ds, dt) != 0)
      throw std::invalid_argument("GroupMorphism: twist map not well defined");
  }
}

GroupElement GroupMorphism::apply(const GroupElement& a) const {
  return target_->normalize(mat_vec(lattice_map_, a.v), twist_map_ * a.c);
}

std::vector<Vec> lcs_layer(const GroupDescriptor& g, int depth) {
  if (depth < 1) throw std::invalid_argument("lcs_layer: depth must be >= 1");
  int m = g.rank();
  if (depth == 1) {
    auto e = identity_matrix(m);
    std::vector<Vec> gens;
    for (int i = 0; i < m; ++i) {
      Vec col(m);
      for (int r = 0; r < m; ++r) col[r] = e[r][i];
      gens.push_back(col);
    }
    return Lattice(m, gens).columns();
  }
  // Gamma_j = ((M - I)^(j-1) Z^m + L) / L for j >= 2: commutators with the
  // twist generator generate each term, and (M^c - I) factors through (M - I)
  // on M-invariant sublattices.
  IMat b = g.action();
  for (int i = 0; i < m; ++i) b[i][i] -= 1;
  IMat p = imat_pow(b, depth - 1);
  std::vector<Vec> gens = g.lattice().columns();
  for (int i = 0; i < m; ++i) {
    Vec col(m);
    for (int r = 0; r < m; ++r) col[r] = p[r][i];
    gens.push_back(col);
  }
  return Lattice(m, gens).columns();
}

int nilpotency_class(const GroupDescriptor& g, int max_depth) {
  if (max_depth < 1)
    throw std::invalid_argument("nilpotency_class: max_depth must be >= 1");
  for (int c = 1; c <= max_depth; ++c) {
    Lattice term(g.rank(), lcs_layer(g, c + 1));
    if (term == g.lattice()) return c;
  }
  return kNilpotencyExceedsDepth;
}

}  // namespace lkb
