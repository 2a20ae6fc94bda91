#pragma once

#include <string>

#include "slfactor/linalg.hpp"

namespace slf {

/// Peephole simplification using the Steinberg relations: drops zero factors,
/// merges same-position factors across commuting gaps, and contracts the two
/// four-factor commutator patterns. Greedy fixpoint with a pass cap of
/// 10 * initial length; the product is always preserved exactly.
Factorization simplify(const Factorization& f);

struct RelationReport {
    bool ok = true;
    std::string detail; // first failing relation, empty when ok
};

/// Exact multiply-back check of the five Steinberg relations on seeded random
/// polynomial coefficients, for n = 3 and n = 4.
RelationReport check_relations(const RingPtr& ring, std::uint64_t seed = 0, int samples = 50);

} // namespace slf
