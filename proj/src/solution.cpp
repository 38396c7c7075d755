#include "birack/solution.hpp"

#include <algorithm>
#include <set>

namespace birack {

namespace {

Perm left_translation(const Solution& s, int x) {
  Perm f(s.n);
  for (int y = 0; y < s.n; ++y) f[y] = s.at(x, y).first;
  return f;
}

Perm right_translation(const Solution& s, int y) {
  Perm f(s.n);
  for (int x = 0; x < s.n; ++x) f[x] = s.at(x, y).second;
  return f;
}

}  // namespace

Solution make_solution(int n, std::vector<std::pair<int, int>> map) {
  if (n < 1 || map.size() != static_cast<size_t>(n) * n)
    throw error(errc::shape_mismatch, "solution table must hold n*n pairs");
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (const auto& [a, b] : map) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw error(errc::shape_mismatch, "pair entry out of range");
    const size_t k = static_cast<size_t>(a) * n + b;
    if (seen[k]) throw error(errc::shape_mismatch, "r is not a bijection of X x X");
    seen[k] = 1;
  }
  return {n, std::move(map)};
}

Solution to_solution(const Birack& b) {
  if (const auto check = verify_birack(b); !check)
    throw error(errc::not_a_birack, check.describe());
  std::vector<std::pair<int, int>> map(static_cast<size_t>(b.n) * b.n);
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y)
      map[static_cast<size_t>(x) * b.n + y] = {b.circ[x][y], b.bullet[x][y]};
  return make_solution(b.n, std::move(map));
}

Birack from_solution(const Solution& s) {
  if (!is_nondegenerate(s))
    throw error(errc::not_nondegenerate, "solution has a non-bijective translation");
  if (!is_involutive(s))
    throw error(errc::not_involutive, "solution is not involutive");
  Table circ(s.n, std::vector<int>(s.n, 0));
  Table bullet(s.n, std::vector<int>(s.n, 0));
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      const auto [a, b] = s.at(x, y);
      circ[x][y] = a;
      bullet[x][y] = b;
    }
  const LeftQuasigroup lq = validate_left_quasigroup(circ);
  const RightQuasigroup rq = validate_right_quasigroup(bullet);
  return {lq.circ, lq.ldiv, rq.bullet, rq.rdiv, s.n};
}

bool is_involutive(const Solution& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      const auto [a, b] = s.at(x, y);
      if (s.at(a, b) != std::pair<int, int>{x, y}) return false;
    }
  return true;
}

bool is_nondegenerate(const Solution& s) {
  for (int x = 0; x < s.n; ++x)
    if (!is_permutation(left_translation(s, x)) || !is_permutation(right_translation(s, x)))
      return false;
  return true;
}

bool is_square_free(const Solution& s) {
  for (int x = 0; x < s.n; ++x)
    if (s.at(x, x) != std::pair<int, int>{x, x}) return false;
  return true;
}

namespace {

using Triple = std::array<int, 3>;

Triple apply_r12(const Solution& s, Triple t) {
  const auto [a, b] = s.at(t[0], t[1]);
  return {a, b, t[2]};
}

Triple apply_r23(const Solution& s, Triple t) {
  const auto [a, b] = s.at(t[1], t[2]);
  return {t[0], a, b};
}

}  // namespace

std::optional<std::array<int, 3>> first_braid_failure(const Solution& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        const Triple t{x, y, z};
        const Triple lhs = apply_r23(s, apply_r12(s, apply_r23(s, t)));
        const Triple rhs = apply_r12(s, apply_r23(s, apply_r12(s, t)));
        if (lhs != rhs) return t;
      }
  return std::nullopt;
}

bool is_braided(const Solution& s) { return !first_braid_failure(s).has_value(); }

YBConditions check_l1_r1_lr3(const Solution& s) {
  auto L = [&](int x, int y) { return s.at(x, y).first; };
  auto R = [&](int y, int x) { return s.at(x, y).second; };  // R_y(x) = x^y
  YBConditions res{true, true, true};
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        if (L(x, L(y, z)) != L(L(x, y), L(R(y, x), z))) res.l1 = false;
        if (R(z, R(y, x)) != R(R(z, y), R(L(y, z), x))) res.r1 = false;
        if (R(L(R(y, x), z), L(x, y)) != L(R(L(y, z), x), R(z, y))) res.lr3 = false;
      }
  return res;
}

std::vector<Perm> permutation_group(const Solution& s) {
  std::vector<Perm> gens;
  for (int x = 0; x < s.n; ++x) {
    Perm f = left_translation(s, x);
    if (!is_permutation(f) || !is_permutation(right_translation(s, x)))
      throw error(errc::degenerate, "translation " + std::to_string(x) + " is not bijective", x);
    gens.push_back(std::move(f));
  }
  std::set<Perm> closure(gens.begin(), gens.end());
  std::vector<Perm> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& g : frontier)
      for (const Perm& h : gens) {
        Perm gh = compose(g, h);
        if (closure.insert(gh).second) next.push_back(std::move(gh));
      }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

std::size_t permutation_group_order(const Solution& s) { return permutation_group(s).size(); }

}  // namespace birack
