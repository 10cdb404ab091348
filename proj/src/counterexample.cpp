#include "lkb/counterexample.hpp"

#include <stdexcept>

namespace lkb {

namespace {

constexpr int kMaxLayer = 40;

Coord pow2(int e) { return static_cast<Coord>(1) << e; }

void require_layer(int r, int least) {
  if (r < least)
    throw std::invalid_argument("layer index must be >= " + std::to_string(least));
  if (r > kMaxLayer) throw std::invalid_argument("layer index too large");
}

}  // namespace

GroupPtr cx_group(int r) {
  require_layer(r, 2);
  return make_group(1, {{pow2(r - 1)}}, {{-1}}, 0);
}

RingMorphism cx_truncation(int r) {
  require_layer(r, 3);
  return RingMorphism(GroupMorphism(cx_group(r), cx_group(r - 1), {{1}}, 1));
}

RingElement cx_witness(int r) {
  require_layer(r, 2);
  GroupPtr g = cx_group(r);
  RingElement f = RingElement::zero(g);
  RingElement one = RingElement::one(g);
  for (int i = 0; i <= r - 2; ++i)
    f = f + RingElement::monomial(g, 1, g->normalize({pow2(i)}, 0)) - one;
  return f;
}

CxReport cx_certificate_for(const std::vector<RingElement>& elements) {
  if (elements.size() < 2)
    throw std::invalid_argument("certificate needs layers 2..r_max");
  CxReport rep;
  rep.r_max = static_cast<int>(elements.size()) + 1;
  rep.all_compatible = true;
  rep.sizes_strictly_increasing = true;
  for (int r = 2; r <= rep.r_max; ++r) {
    const RingElement& f = elements[static_cast<size_t>(r) - 2];
    if (!f.ring() || !f.ring()->same_group(*cx_group(r)))
      throw std::invalid_argument("certificate: element " + std::to_string(r) +
                                  " lives in the wrong ring");
    CxLayerInfo info;
    info.r = r;
    info.support_size = f.support_size();
    info.compatible =
        r == 2 ||
        cx_truncation(r).apply(f) == elements[static_cast<size_t>(r) - 3];
    rep.all_compatible = rep.all_compatible && info.compatible;
    if (r > 2)
      rep.sizes_strictly_increasing =
          rep.sizes_strictly_increasing &&
          info.support_size > rep.layers.back().support_size;
    rep.layers.push_back(info);
  }
  if (rep.pass()) {
    rep.conclusion =
        "compatible sequence with strictly growing support; truncation never "
        "enlarges supports, so no single finite-support element maps onto "
        "every layer";
  } else {
    rep.conclusion = "certificate failed";
  }
  return rep;
}

CxReport cx_certificate(int r_max) {
  require_layer(r_max, 3);
  std::vector<RingElement> elements;
  elements.reserve(static_cast<size_t>(r_max) - 1);
  for (int r = 2; r <= r_max; ++r) elements.push_back(cx_witness(r));
  return cx_certificate_for(elements);
}

}  // namespace lkb
