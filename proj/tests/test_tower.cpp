#include <stdexcept>

#include "doctest.h"
#include "lkb/tower.hpp"
#include "support/oracles.hpp"

using namespace lkb;
using testsupport::Rng;

TEST_SUITE("tower") {

TEST_CASE("layer construction") {
  CHECK(make_layer(2).group->lattice().columns() == std::vector<Vec>{{1, -1}});
  CHECK(make_layer(3).group->lattice().columns() == std::vector<Vec>{{2, -2}});
  CHECK(nilpotency_class(*make_layer(5).group, 8) == 4);
  CHECK(!make_layer(2).step_down.has_value());
  CHECK(make_layer(3).step_down.has_value());
  CHECK_THROWS_AS(make_layer(1), std::invalid_argument);

  // layer 2 is the classical commutative ground ring
  CHECK(make_layer(2).group->same_group(*classical_group()));
  GroupPtr q2 = make_layer(2).group;
  Rng rng(67);
  for (int it = 0; it < 100; ++it) {
    GroupElement a = testsupport::random_element(rng, q2);
    GroupElement b = testsupport::random_element(rng, q2);
    CHECK(q2->mul(a, b) == q2->mul(b, a));
  }
}

TEST_CASE("layer 2 in its plain abelian form") {
  GroupMorphism iso = classical_abelian_form();
  GroupPtr q2 = make_layer(2).group;
  GroupPtr zz = iso.target();
  CHECK(iso.apply(q2->normalize({0, 1}, 0)) == GroupElement{{1}, 0});
  CHECK(iso.apply(q2->normalize({0, 0}, 1)) == GroupElement{{0}, 1});
  // composed with the layer-2 quotient, both generators hit the same image
  GroupMorphism down = make_layer(2).from_theta;
  GroupPtr th = theta_group();
  CHECK(iso.apply(down.apply(th->normalize({1, 0}, 0))) ==
        GroupElement{{1}, 0});
  CHECK(iso.apply(down.apply(th->normalize({0, 1}, 0))) ==
        GroupElement{{1}, 0});
  // injective on normal forms and a homomorphism
  Rng rng(97);
  for (int it = 0; it < 100; ++it) {
    GroupElement a = testsupport::random_element(rng, q2);
    GroupElement b = testsupport::random_element(rng, q2);
    if (iso.apply(a) == iso.apply(b)) CHECK(a == b);
    CHECK(iso.apply(q2->mul(a, b)) == zz->mul(iso.apply(a), iso.apply(b)));
  }
}

TEST_CASE("quotient maps are compatible across layers") {
  GroupPtr th = theta_group();
  std::vector<GroupElement> gens = {th->normalize({1, 0}, 0),
                                    th->normalize({0, 1}, 0),
                                    th->normalize({0, 0}, 1)};
  for (int r = 3; r <= 6; ++r) {
    TowerLayer layer = make_layer(r);
    TowerLayer prev = make_layer(r - 1);
    for (const GroupElement& g : gens)
      CHECK(layer.step_down->apply(layer.from_theta.apply(g)) ==
            prev.from_theta.apply(g));
  }
}

TEST_CASE("layer classes and series endpoints") {
  for (int r = 2; r <= 8; ++r) {
    GroupPtr g = make_layer(r).group;
    // Gamma_r is trivial, Gamma_(r-1) is not
    CHECK(Lattice(2, lcs_layer(*g, r)) == g->lattice());
    if (r > 2) CHECK(!(Lattice(2, lcs_layer(*g, r - 1)) == g->lattice()));
    CHECK(nilpotency_class(*g, r + 2) == r - 1);
  }
}

TEST_CASE("layer generator matrices") {
  // layer 2 reproduces the classical specialization
  for (int i : {1, 2, 3}) CHECK(layer_sigma(4, i, 2) == classical_sigma_matrix(4, i));

  // a deep layer relabels entries injectively: supports match the source
  RepMatrix s = sigma_matrix(4, 2);
  RepMatrix deep = layer_sigma(4, 2, 12);
  for (const auto& [rc, e] : s.entries()) {
    const BasisKey& row = s.keys()[static_cast<size_t>(rc.first)];
    const BasisKey& col = s.keys()[static_cast<size_t>(rc.second)];
    CHECK(deep.at(row, col).support_size() == e.support_size());
  }

  // step-down of layer 4 equals layer 3 directly
  RepMatrix via = matrix_map(RingMorphism(*make_layer(4).step_down),
                             layer_sigma(5, 2, 4));
  CHECK(via == layer_sigma(5, 2, 3));
}

TEST_CASE("check_tower passes and reports") {
  Report rep = check_tower(4, 6);
  CHECK(rep.all_pass());
  Report small = check_tower(3, 3);
  CHECK(small.all_pass());
  CHECK_THROWS_AS(check_tower(4, 2), std::invalid_argument);
}

TEST_CASE("a wrong lattice scale breaks the class check") {
  // 3 * (1,-1) instead of 2^(r-2) * (1,-1): the series stalls at (1,-1)Z/3(1,-1)Z
  GroupPtr fake = make_group(2, {{3, -3}}, {{0, 1}, {1, 0}}, 0);
  CHECK(nilpotency_class(*fake, 12) == kNilpotencyExceedsDepth);
  CHECK(nilpotency_class(*fake, 12) != 3);
}

TEST_CASE("reduction squares commute on random words") {
  Rng rng(71);
  for (int n = 3; n <= 4; ++n) {
    std::vector<RingMorphism> from;
    for (int r = 2; r <= 5; ++r)
      from.emplace_back(make_layer(r).from_theta);
    for (int it = 0; it < 6; ++it) {
      BraidWord w = testsupport::random_word(rng, n, 8);
      RepMatrix over_theta = word_matrix(w);
      std::vector<RepMatrix> layers;
      for (const auto& phi : from)
        layers.push_back(matrix_map(phi, over_theta));
      for (int r = 3; r <= 5; ++r) {
        RingMorphism down(*make_layer(r).step_down);
        CHECK(matrix_map(down, layers[static_cast<size_t>(r) - 2]) ==
              layers[static_cast<size_t>(r) - 3]);
      }
    }
  }
}

}  // TEST_SUITE
