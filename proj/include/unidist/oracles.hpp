#pragma once

#include <vector>

#include "unidist/orbits.hpp"

namespace unidist::oracle {

// Independent brute-force enumeration of orbit shapes: generates every
// (split, subset, involution) triple over the flattened index set and filters
// it against the membership, admissibility and reducedness conditions stated
// one by one, without the structural shortcuts of the engine's enumerator.
// Intended for cross-checking at small sizes (flattened count <= 8).
std::vector<orb::OrbitShape> brute_force_orbit_shapes(const std::vector<int64_t>& sizes);

// Canonical sort key so shape lists can be compared as sets.
std::vector<orb::OrbitShape> canonical_shapes(std::vector<orb::OrbitShape> shapes);
bool same_shapes(std::vector<orb::OrbitShape> a, std::vector<orb::OrbitShape> b);

} // namespace unidist::oracle
