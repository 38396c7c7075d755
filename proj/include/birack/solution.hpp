#pragma once

#include <array>
#include <optional>
#include <utility>

#include "birack/birack.hpp"

namespace birack {

// Quadratic set (X, r) with r(x, y) = (x o y, x • y), stored as a flat
// n*n table of pairs.  Invariant: r is a bijection of X x X.
struct Solution {
  int n = 0;
  std::vector<std::pair<int, int>> map;  // index x * n + y

  std::pair<int, int> at(int x, int y) const {
    return map[static_cast<size_t>(x) * n + y];
  }

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Validates the pair-bijectivity invariant; throws shape_mismatch.
Solution make_solution(int n, std::vector<std::pair<int, int>> map);

// Requires verify_birack to pass (throws not_a_birack otherwise).
Solution to_solution(const Birack& b);

// Requires the solution to be non-degenerate and involutive.
Birack from_solution(const Solution& s);

// r(r(x, y)) = (x, y) for all pairs.
bool is_involutive(const Solution& s);
// All left and right actions L_x, R_x are bijections.
bool is_nondegenerate(const Solution& s);
// r(x, x) = (x, x) for every x.
bool is_square_free(const Solution& s);

// (id x r)(r x id)(id x r) = (r x id)(id x r)(r x id), both sides
// materialized on X^3 and compared in lexicographic order.
bool is_braided(const Solution& s);
std::optional<std::array<int, 3>> first_braid_failure(const Solution& s);

struct YBConditions {
  bool l1 = false, r1 = false, lr3 = false;
  bool all() const { return l1 && r1 && lr3; }
};

// Evaluates the three displayed identities directly on the pair table.  For
// non-degenerate solutions their conjunction is equivalent to the braid
// relation.
YBConditions check_l1_r1_lr3(const Solution& s);

// Closure of the left translations under composition, sorted; throws
// degenerate when some translation is not bijective.
std::vector<Perm> permutation_group(const Solution& s);
std::size_t permutation_group_order(const Solution& s);

}  // namespace birack
