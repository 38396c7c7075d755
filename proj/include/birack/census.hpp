#pragma once

#include <cstddef>

#include "birack/isotope.hpp"

namespace birack {

// All right cyclic non-degenerate left quasigroups of size n, turned into
// involutive biracks via the derived • operation.  With up_to_iso, one
// canonical representative per relabelling orbit; output sorted either way.
// n = 5 only with allow_large.
std::vector<Birack> enumerate_solutions(int n, bool up_to_iso, bool allow_large = false);

// Minimum over all n! relabellings of the concatenated (circ, bullet)
// tables; equal canonical forms characterize isomorphic biracks.
std::pair<Table, Table> canonical_label(const Birack& b);

// Relabelling count fixing both tables.
std::size_t automorphism_count(const Birack& b);

// All p-tuples of degree-preserving permutations passing validation at the
// requested level, in lexicographic order.  Requires b graded w.r.t. g.
std::vector<TwistSystem> enumerate_twist_systems(const Birack& b, const Grading& g, bool strong);

// Every canonically labelled partition of the carrier that grades b (both
// the o and • conditions).
std::vector<Grading> enumerate_gradings(const Birack& b);

}  // namespace birack
