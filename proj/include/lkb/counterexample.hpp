#pragma once

#include <string>
#include <vector>

#include "lkb/ring.hpp"

namespace lkb {

// Nilpotent quotient Z/2^(r-1) semidirect Z of the infinite dihedral-type
// group Z semidirect Z, where the twist generator acts by inversion.
GroupPtr cx_group(int r);

// Layer step Z[Z/2^(r-1) x| Z] -> Z[Z/2^(r-2) x| Z]: the lattice part
// reduces modulo 2^(r-2) and the twist generator is fixed.
RingMorphism cx_truncation(int r);

// The compatible sequence member at layer r: sum over 0 <= i <= r-2 of
// (x^(2^i) - 1). Its support has exactly r elements, with identity
// coefficient -(r-1).
RingElement cx_witness(int r);

struct CxLayerInfo {
  int r = 0;
  int support_size = 0;
  bool compatible = false;  // vacuously true at the base layer
};

struct CxReport {
  int r_max = 0;
  std::vector<CxLayerInfo> layers;
  bool all_compatible = false;
  bool sizes_strictly_increasing = false;
  std::string conclusion;
  bool pass() const { return all_compatible && sizes_strictly_increasing; }
};

// Checks layer-to-layer compatibility of a sequence of elements, element r
// over cx_group(r) for r = 2..r_max, and records support sizes. Ring
// morphisms never enlarge supports, so an unbounded support sequence has no
// single finite-support preimage above the tower.
CxReport cx_certificate_for(const std::vector<RingElement>& elements);

// The certificate for the shipped witness sequence up to r_max.
CxReport cx_certificate(int r_max);

}  // namespace lkb
