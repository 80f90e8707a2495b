#pragma once

#include <cstdint>
#include <vector>

#include "vspan/diagram.hpp"

namespace vspan {

// Closed 2-strand braid with blocks of |r_i| crossings of sign sgn(r_i),
// consecutive blocks (and the closure) separated by one virtual crossing, so
// a list of s entries has s virtual crossings and c = sum |r_i| real ones.
// Throws DomainError on an empty list or a zero entry.
Diagram gen_k(const std::vector<int>& rs);

// What the same list collapses to once the twists are slid together:
// r = sum r_i crossings in one block, with a single leftover virtual
// crossing when s is odd and none when s is even.
Diagram reduce_k(const std::vector<int>& rs);

// Chain of n handle gadgets with an r-crossing twist region: a proper
// alternating knot diagram with genus n and 10n + r - 2 crossings.  The
// construction re-derives those three properties on every call and throws
// InternalError if any fails.
Diagram gen_dnr(int n, int r);

// Seeded random proper alternating knot diagram.  A short scan of random
// alternating words picks a start (falling back to a fixed proper word of
// the requested size when the scan misses), then a walk of chord
// re-pairings and sign flips keeps every mutation that stays proper, so
// the result is in spec by construction.  Deterministic for a fixed seed.
// Sizes that admit no proper alternating knot diagram at all exhaust
// max_attempts and throw ResourceLimitError.
Diagram random_proper_alternating(int crossings, std::uint64_t seed, int max_attempts = 10000);

} // namespace vspan
