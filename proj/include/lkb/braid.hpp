#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lkb/matrix.hpp"
#include "lkb/report.hpp"

namespace lkb {

// The three-variable ground group Z^2 semidirect Z, where the twist
// generator swaps the two lattice coordinates: q1 = x^(1,0), q2 = x^(0,1),
// t = the twist generator, subject to q1 q2 = q2 q1, q1 t = t q2,
// q2 t = t q1. Shared singleton; descriptors compare structurally, so
// independently built copies interoperate.
GroupPtr theta_group();

// Abelianization target of theta_group: Z^2/(1,-1) semidirect Z, on which the
// twist action is trivial, so the group ring is the commutative Laurent ring
// in the common image q of q1, q2 and in t.
GroupPtr classical_group();
GroupMorphism theta_to_classical();

// coeff * q1^a * q2^b * t^c over theta_group().
RingElement theta_monomial(long coeff, Coord a, Coord b, Coord c);

// All (n-1)-tuples of non-negative integers summing to k, largest leading
// entries first; count is binom(n+k-2, k).
std::vector<BasisKey> enumerate_basis(int n, int k);

struct BraidWord {
  int n = 0;                 // strand count
  std::vector<int> letters;  // signed generator indices, |letter| in [1, n-1]
};

BraidWord make_braid_word(int n, std::vector<int> letters);
// Whitespace-separated signed integers, e.g. "1 -2 3".
BraidWord parse_braid_word(int n, const std::string& text);

// Generator matrix on the sum-2 basis over theta_group(), assembled from the
// local 6x6 and 3x3 blocks; n >= 3, 1 <= i <= n-1.
RepMatrix sigma_matrix(int n, int i);

// Left-to-right product of generator matrices; inverse letters use computed
// matrix inverses. Empty word gives the identity.
RepMatrix word_matrix(const BraidWord& w);

using GeneratorProvider = std::function<RepMatrix(int i)>;

// Checks all braid and far-commutation relations among the provided
// generator images; one report item per relation.
Report verify_braid_relations(int n, const GeneratorProvider& gen);
Report verify_braid_relations(int n);  // over theta_group()

// Word equality through matrix equality; the representation is faithful, so
// this decides equality in the braid group.
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Generator matrix with q1 = q2 identified, over classical_group().
RepMatrix classical_sigma_matrix(int n, int i);

}  // namespace lkb
