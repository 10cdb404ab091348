#include "lkb/tower.hpp"

#include <stdexcept>

namespace lkb {

namespace {

constexpr int kMaxLayer = 40;  // keeps 2^(r-2) within Coord range

Coord pow2(int e) { return static_cast<Coord>(1) << e; }

GroupPtr layer_group(int r) {
  return make_group(2, {{pow2(r - 2), -pow2(r - 2)}}, {{0, 1}, {1, 0}}, 0);
}

}  // namespace

TowerLayer make_layer(int r) {
  if (r < 2) throw std::invalid_argument("make_layer: r must be >= 2");
  if (r > kMaxLayer) throw std::invalid_argument("make_layer: r too large");
  TowerLayer layer{r, layer_group(r),
                   GroupMorphism(theta_group(), layer_group(r),
                                 identity_matrix(2), 1),
                   std::nullopt};
  if (r >= 3)
    layer.step_down = GroupMorphism(layer.group, layer_group(r - 1),
                                    identity_matrix(2), 1);
  return layer;
}

GroupMorphism classical_abelian_form() {
  GroupPtr pair = make_group(1, {}, {{1}}, 0);
  return GroupMorphism(layer_group(2), pair, {{1, 1}}, 1);
}

RepMatrix layer_sigma(int n, int i, int r) {
  return matrix_map(RingMorphism(make_layer(r).from_theta),
                    sigma_matrix(n, i));
}

Report check_tower(int n, int r_max) {
  if (n < 3) throw std::invalid_argument("check_tower: n must be >= 3");
  if (r_max < 3) throw std::invalid_argument("check_tower: r_max must be >= 3");
  Report rep;
  for (int r = 2; r <= r_max; ++r) {
    TowerLayer layer = make_layer(r);
    bool ok = nilpotency_class(*layer.group, r + 2) == r - 1;
    rep.items.push_back({"nilpotency_class(layer " + std::to_string(r) +
                             ") == " + std::to_string(r - 1),
                         ok});
  }
  for (int r = 2; r <= r_max; ++r) {
    Report rel = verify_braid_relations(
        n, [n, r](int i) { return layer_sigma(n, i, r); });
    rep.items.push_back(
        {"braid relations over layer " + std::to_string(r), rel.all_pass()});
  }
  for (int r = 3; r <= r_max; ++r) {
    TowerLayer layer = make_layer(r);
    RingMorphism down(*layer.step_down);
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i)
      ok = ok && matrix_map(down, layer_sigma(n, i, r)) ==
                     layer_sigma(n, i, r - 1);
    rep.items.push_back({"reduction square layer " + std::to_string(r) +
                             " -> " + std::to_string(r - 1),
                         ok});
  }
  return rep;
}

}  // namespace lkb
