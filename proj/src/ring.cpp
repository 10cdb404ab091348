#include "lkb/ring.hpp"

#include <stdexcept>

namespace lkb {

RingElement RingElement::one(GroupPtr ring) {
  RingElement e(std::move(ring));
  e.terms_.emplace(e.ring_->identity(), Int(1));
  return e;
}

RingElement RingElement::monomial(GroupPtr ring, Int coeff,
                                  const GroupElement& g) {
  RingElement e(std::move(ring));
  if (coeff != 0) e.terms_.emplace(g, std::move(coeff));
  return e;
}

Int RingElement::augmentation() const {
  Int s = 0;
  for (const auto& [g, c] : terms_) s += c;
  return s;
}

void RingElement::add_term(const GroupElement& g, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElement::require_same_ring(const RingElement& o) const {
  if (!ring_ || !o.ring_)
    throw std::invalid_argument("ring operation on null element");
  if (!ring_->same_group(*o.ring_))
    throw std::invalid_argument("ring mismatch");
}

RingElement RingElement::operator-() const {
  RingElement out(ring_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  a.require_same_ring(b);
  RingElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, c);
  return out;
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  a.require_same_ring(b);
  RingElement out = a;
  for (const auto& [g, c] : b.terms_) out.add_term(g, -c);
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.require_same_ring(b);
  RingElement out(a.ring_);
  const GroupDescriptor& g = *a.ring_;
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_)
      out.add_term(g.mul(ga, gb), ca * cb);
  return out;
}

bool RingElement::operator==(const RingElement& o) const {
  require_same_ring(o);
  return terms_ == o.terms_;
}

RingElement RingMorphism::apply(const RingElement& a) const {
  if (!a.ring() || !a.ring()->same_group(*gm_.source()))
    throw std::invalid_argument("RingMorphism: element not in source ring");
  RingElement out(gm_.target());
  for (const auto& [g, c] : a.terms()) out.add_term(gm_.apply(g), c);
  return out;
}

}  // namespace lkb
