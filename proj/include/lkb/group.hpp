#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lkb/lattice.hpp"

namespace lkb {

// Element x^v * t^c of a group (Z^m / L) semidirect Z_d, stored in normal
// form: v is the canonical coset representative, and 0 <= c < d when d > 0.
struct GroupElement {
  Vec v;
  Coord c = 0;
  bool operator==(const GroupElement&) const = default;
};

// Canonical term order for group-ring serialization: twist exponent first,
// then lattice part lexicographically.
struct GroupElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    if (a.c != b.c) return a.c < b.c;
    return a.v < b.v;
  }
};

class GroupDescriptor;
using GroupPtr = std::shared_ptr<const GroupDescriptor>;

// Immutable description of a group (Z^m / L) semidirect_M Z_d, where the
// twist generator t acts on the lattice part by the unimodular matrix M and
// d = 0 means the twist factor is infinite cyclic. All reduction data is
// computed once at construction; every operation is a pure function.
class GroupDescriptor {
 public:
  int rank() const { return m_; }
  Coord twist_modulus() const { return d_; }
  const IMat& action() const { return action_; }
  const IMat& action_inverse() const { return action_inv_; }
  const Lattice& lattice() const { return lattice_; }

  GroupElement identity() const { return GroupElement{Vec(m_, 0), 0}; }
  GroupElement normalize(Vec v, Coord c) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  // M^c applied to v, for any sign of c.
  Vec twist_power(const Vec& v, Coord c) const;

  // Structural equality; descriptors built independently from the same data
  // are interchangeable.
  bool same_group(const GroupDescriptor& o) const;

  friend GroupPtr make_group(int m, const std::vector<Vec>& lattice_generators,
                             const IMat& action, Coord twist_modulus);

 private:
  GroupDescriptor() = default;

  int m_ = 0;
  Coord d_ = 0;
  IMat action_;
  IMat action_inv_;
  Lattice lattice_;
  int action_order_ = 0;  // multiplicative order of M if small, else 0
};

// Validates and precomputes; throws std::invalid_argument when the action is
// not unimodular, does not preserve the lattice, or has the wrong order
// modulo the lattice when d > 0.
GroupPtr make_group(int m, const std::vector<Vec>& lattice_generators,
                    const IMat& action, Coord twist_modulus);

// Homomorphism determined by x^v -> x^(A v) and t -> t^w. Construction
// checks that A maps the source lattice into the target lattice and that it
// intertwines the two twist actions modulo the target lattice.
class GroupMorphism {
 public:
  GroupMorphism(GroupPtr source, GroupPtr target, IMat lattice_map,
                Coord twist_map);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const IMat& lattice_map() const { return lattice_map_; }
  Coord twist_map() const { return twist_map_; }

  GroupElement apply(const GroupElement& a) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  IMat lattice_map_;
  Coord twist_map_;
};

// Lattice part of the j-th lower-central-series term, as HNF generators of
// the full preimage lattice in Z^m (so the term is trivial exactly when the
// result equals the defining lattice L). For j = 1 the whole lattice factor
// Z^m is returned; for j >= 2 the term is ((M - I)^(j-1) Z^m + L) / L.
std::vector<Vec> lcs_layer(const GroupDescriptor& g, int depth);

inline constexpr int kNilpotencyExceedsDepth = -1;

// Least c with trivial Gamma_(c+1), or the sentinel if not reached within
// max_depth.
int nilpotency_class(const GroupDescriptor& g, int max_depth);

}  // namespace lkb
