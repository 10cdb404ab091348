#pragma once

#include <optional>

#include "lkb/braid.hpp"

namespace lkb {

// One layer of the nilpotent quotient tower under theta_group(): the group
// Z^2 / 2^(r-2)(1,-1) semidirect Z of nilpotency class r-1, together with
// the quotient map from the theta group and, for r >= 3, the step down to
// the previous layer. Layer 2 is the classical (commutative) ground ring.
struct TowerLayer {
  int r = 0;
  GroupPtr group;
  GroupMorphism from_theta;
  std::optional<GroupMorphism> step_down;
};

TowerLayer make_layer(int r);

// The canonical isomorphism from the layer-2 presentation onto Z x Z,
// sending x^(a,b) t^c to (a + b, c). Composed with the layer-2 quotient it
// identifies both commuting generators with a single variable.
GroupMorphism classical_abelian_form();

// Generator matrix reduced to layer r; layer 2 reproduces
// classical_sigma_matrix.
RepMatrix layer_sigma(int n, int i, int r);

// Verifies, for 3 <= r <= r_max: the step-down image of every layer-r
// generator equals the layer-(r-1) generator; braid relations hold in every
// layer 2..r_max; and each layer group has nilpotency class r-1.
Report check_tower(int n, int r_max);

}  // namespace lkb
