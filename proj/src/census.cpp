#include "birack/census.hpp"

#include <algorithm>

namespace birack {

namespace {

std::vector<Perm> all_perms(int n) {
  Perm base = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Row-by-row search state; rows hold candidate permutations L_0..L_{k}.
struct RowSearch {
  int n;
  const std::vector<Perm>& perms;
  std::vector<const Perm*> rows;
  std::vector<const Perm*> inv_rows;
  std::vector<Perm> inverses;
  std::vector<Table> found;

  RowSearch(int n, const std::vector<Perm>& perms) : n(n), perms(perms) {
    inverses.reserve(perms.size());
    for (const Perm& f : perms) inverses.push_back(inverse_perm(f));
  }

  // Checks every constraint that becomes decidable once rows 0..k exist:
  // distinct x \o x values and all fully determined right cyclic identities.
  bool consistent(int k) const {
    for (int x = 0; x < k; ++x)
      if ((*inv_rows[x])[x] == (*inv_rows[k])[k]) return false;
    for (int x = 0; x <= k; ++x)
      for (int y = 0; y <= k; ++y) {
        if (x != k && y != k) continue;  // already checked at an earlier level
        const int a = (*inv_rows[x])[y];
        const int b = (*inv_rows[y])[x];
        if (a > k || b > k) continue;
        const Perm& lx = *rows[x];
        const Perm& ly = *rows[y];
        const Perm& la = *rows[a];
        const Perm& lb = *rows[b];
        for (int z = 0; z < n; ++z)
          if (lx[la[z]] != ly[lb[z]]) return false;
      }
    // Placing row k may also complete conditions among earlier rows whose
    // divisions point at k.
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        const int a = (*inv_rows[x])[y];
        const int b = (*inv_rows[y])[x];
        if (a != k && b != k) continue;
        if (a > k || b > k) continue;
        const Perm& lx = *rows[x];
        const Perm& ly = *rows[y];
        const Perm& la = *rows[a];
        const Perm& lb = *rows[b];
        for (int z = 0; z < n; ++z)
          if (lx[la[z]] != ly[lb[z]]) return false;
      }
    return true;
  }

  void search(int k) {
    if (k == n) {
      Table t(n);
      for (int x = 0; x < n; ++x) t[x] = *rows[x];
      found.push_back(std::move(t));
      return;
    }
    for (size_t i = 0; i < perms.size(); ++i) {
      rows[k] = &perms[i];
      inv_rows[k] = &inverses[i];
      if (consistent(k)) search(k + 1);
    }
  }
};

Table relabel(const Table& t, const Perm& f, const Perm& f_inv) {
  const int n = static_cast<int>(t.size());
  Table out(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = f[t[f_inv[x]][f_inv[y]]];
  return out;
}

}  // namespace

std::vector<Birack> enumerate_solutions(int n, bool up_to_iso, bool allow_large) {
  if (n < 1 || n > 5 || (n == 5 && !allow_large))
    throw error(errc::size_unsupported,
                n == 5 ? "n = 5 requires the long-running flag" : "supported sizes are 1..5", n);

  const std::vector<Perm> perms = all_perms(n);
  RowSearch search(n, perms);
  search.rows.resize(n);
  search.inv_rows.resize(n);
  search.search(0);

  std::vector<Birack> out;
  out.reserve(search.found.size());
  for (const Table& circ : search.found)
    out.push_back(derive_birack(validate_left_quasigroup(circ)));

  if (up_to_iso) {
    std::vector<std::pair<std::pair<Table, Table>, size_t>> canon;
    canon.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i) canon.emplace_back(canonical_label(out[i]), i);
    std::sort(canon.begin(), canon.end());
    std::vector<Birack> reps;
    for (size_t i = 0; i < canon.size(); ++i) {
      if (i > 0 && canon[i].first == canon[i - 1].first) continue;
      const auto& [circ, bullet] = canon[i].first;
      reps.push_back(birack_from_tables(circ, bullet));
    }
    return reps;
  }

  std::sort(out.begin(), out.end(), [](const Birack& a, const Birack& b) {
    return std::pair(a.circ, a.bullet) < std::pair(b.circ, b.bullet);
  });
  return out;
}

std::pair<Table, Table> canonical_label(const Birack& b) {
  Perm f = identity_perm(b.n);
  std::pair<Table, Table> best{b.circ, b.bullet};
  do {
    const Perm f_inv = inverse_perm(f);
    std::pair<Table, Table> cand{relabel(b.circ, f, f_inv), relabel(b.bullet, f, f_inv)};
    if (cand < best) best = std::move(cand);
  } while (std::next_permutation(f.begin(), f.end()));
  return best;
}

std::size_t automorphism_count(const Birack& b) {
  Perm f = identity_perm(b.n);
  std::size_t count = 0;
  do {
    const Perm f_inv = inverse_perm(f);
    if (relabel(b.circ, f, f_inv) == b.circ && relabel(b.bullet, f, f_inv) == b.bullet) ++count;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

std::vector<TwistSystem> enumerate_twist_systems(const Birack& b, const Grading& g, bool strong) {
  if (!is_graded(b, g))
    throw error(errc::hypothesis_violated, "birack is not graded for the given grading");
  const int n = b.n;

  // Degree-preserving candidates: independent permutations of each block.
  std::vector<std::vector<int>> blocks(g.p);
  for (int x = 0; x < n; ++x) blocks[g.block[x] - 1].push_back(x);
  std::vector<Perm> candidates;
  Perm current = identity_perm(n);
  auto fill = [&](auto&& self, size_t bi) -> void {
    if (bi == blocks.size()) {
      candidates.push_back(current);
      return;
    }
    std::vector<int> images = blocks[bi];
    std::sort(images.begin(), images.end());
    do {
      for (size_t i = 0; i < images.size(); ++i) current[blocks[bi][i]] = images[i];
      self(self, bi + 1);
    } while (std::next_permutation(images.begin(), images.end()));
  };
  fill(fill, 0);
  std::sort(candidates.begin(), candidates.end());

  // Per-candidate strong conditions do not depend on the rest of the tuple.
  std::vector<Perm> admissible;
  const LeftQuasigroup lq = b.left();
  for (const Perm& f : candidates) {
    if (strong) {
      if (!is_automorphism(lq, f, g)) continue;
      bool stable = true;
      for (int x = 0; x < n && stable; ++x)
        if (lq.circ[f[x]] != lq.circ[x]) stable = false;
      if (!stable) continue;
    }
    admissible.push_back(f);
  }

  std::vector<TwistSystem> out;
  std::vector<size_t> idx(g.p, 0);
  if (admissible.empty()) return out;
  while (true) {
    bool commuting = true;
    for (int s = 0; s < g.p && commuting; ++s)
      for (int u = s + 1; u < g.p && commuting; ++u)
        if (compose(admissible[idx[s]], admissible[idx[u]]) !=
            compose(admissible[idx[u]], admissible[idx[s]]))
          commuting = false;
    if (commuting) {
      TwistSystem t;
      t.grading = g;
      for (int s = 0; s < g.p; ++s) t.phis.push_back(admissible[idx[s]]);
      out.push_back(std::move(t));
    }
    int pos = g.p - 1;
    while (pos >= 0 && ++idx[pos] == admissible.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<Grading> enumerate_gradings(const Birack& b) {
  const int n = b.n;
  std::vector<Grading> out;
  // Restricted growth strings are exactly the canonically labelled partitions.
  std::vector<int> block(n, 1);
  auto rec = [&](auto&& self, int i, int top) -> void {
    if (i == n) {
      Grading g = Grading::from_blocks(block);
      if (is_graded(b, g)) out.push_back(std::move(g));
      return;
    }
    for (int v = 1; v <= top + 1; ++v) {
      block[i] = v;
      self(self, i + 1, std::max(top, v));
    }
  };
  block[0] = 1;
  rec(rec, 1, 1);
  return out;
}

}  // namespace birack
