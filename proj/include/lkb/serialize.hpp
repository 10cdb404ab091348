#pragma once

#include <string>

#include "json.hpp"
#include "lkb/matrix.hpp"

namespace lkb {

using Json = nlohmann::ordered_json;

// Group descriptors serialize with their canonical (Hermite-form) lattice
// generators, so every emitted object is self-describing.
Json descriptor_to_json(const GroupDescriptor& g);
GroupPtr descriptor_from_json(const Json& j);

// {"terms": [{"coeff": "<decimal>", "v": [...], "c": ...}, ...]} in the
// canonical term order; coefficients are decimal strings since they may
// exceed 64 bits.
Json ring_element_to_json(const RingElement& e);
RingElement ring_element_from_json(GroupPtr ring, const Json& j);

// {"n": <dimension>, "ring": ..., "keys": [...], "entries":
//  [[row, col, element], ...]} with entries ordered by key position.
Json matrix_to_json(const RepMatrix& a);
RepMatrix matrix_from_json(const Json& j);

// Lossy display form: entries as signed monomial sums in q_1, q_2, t with
// the lattice part written before the twist part.
std::string matrix_to_latex(const RepMatrix& a);

std::string dump_json(const Json& j);

}  // namespace lkb
