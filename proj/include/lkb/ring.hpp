#pragma once

#include <map>
#include <utility>

#include "lkb/group.hpp"
#include "lkb/ints.hpp"

namespace lkb {

// Element of the integral group ring Z[G]: a finite formal sum of group
// elements with exact integer coefficients. Terms are kept in canonical
// order (twist exponent, then lattice part) and never store a zero
// coefficient, so structural equality is ring equality.
class RingElement {
 public:
  using TermMap = std::map<GroupElement, Int, GroupElementLess>;

  RingElement() = default;  // null element; usable only as a placeholder
  explicit RingElement(GroupPtr ring) : ring_(std::move(ring)) {}

  static RingElement zero(GroupPtr ring) { return RingElement(std::move(ring)); }
  static RingElement one(GroupPtr ring);
  static RingElement monomial(GroupPtr ring, Int coeff, const GroupElement& g);

  const GroupPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }
  Int augmentation() const;

  // Merges a term into the sum (zero results are pruned). The key must be in
  // normal form for the ring's group.
  void add_term(const GroupElement& g, const Int& coeff);

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  // Exact equality of canonical forms; throws on ring mismatch.
  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

 private:
  void require_same_ring(const RingElement& o) const;

  GroupPtr ring_;
  TermMap terms_;
};

// Ring homomorphism Z[G] -> Z[H] induced by a group homomorphism; distinct
// monomials may collide in the image and their coefficients add.
class RingMorphism {
 public:
  explicit RingMorphism(GroupMorphism gm) : gm_(std::move(gm)) {}

  const GroupMorphism& group_morphism() const { return gm_; }
  RingElement apply(const RingElement& a) const;

 private:
  GroupMorphism gm_;
};

}  // namespace lkb
