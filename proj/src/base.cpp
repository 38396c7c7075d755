#include "birack/base.hpp"

#include <algorithm>

namespace birack {

const char* errc_name(errc c) {
  switch (c) {
    case errc::row_not_bijective: return "RowNotBijective";
    case errc::column_not_bijective: return "ColumnNotBijective";
    case errc::not_nondegenerate: return "NotNondegenerate";
    case errc::not_right_cyclic: return "NotRightCyclic";
    case errc::not_involutive: return "NotInvolutive";
    case errc::not_distributive: return "NotDistributive";
    case errc::not_a_birack: return "NotABirack";
    case errc::degenerate: return "Degenerate";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::bad_grading: return "BadGrading";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::size_unsupported: return "SizeUnsupported";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::overflow: return "Overflow";
    case errc::bad_document: return "BadDocument";
  }
  return "UnknownError";
}

bool is_permutation(const Perm& f) {
  const int n = static_cast<int>(f.size());
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  return f;
}

Perm inverse_perm(const Perm& f) {
  Perm r(f.size());
  for (int i = 0; i < static_cast<int>(f.size()); ++i) r[f[i]] = i;
  return r;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (int i = 0; i < static_cast<int>(g.size()); ++i) r[i] = f[g[i]];
  return r;
}

bool table_shaped(const Table& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  return true;
}

int table_size(const Table& t) {
  if (!table_shaped(t))
    throw error(errc::shape_mismatch, "table is not square with entries in 0..n-1");
  return static_cast<int>(t.size());
}

Grading Grading::trivial(int n) {
  Grading g;
  g.block.assign(static_cast<size_t>(n), 1);
  g.p = n > 0 ? 1 : 0;
  return g;
}

Grading Grading::from_blocks(std::vector<int> blocks) {
  if (blocks.empty()) throw error(errc::bad_grading, "grading must cover a nonempty carrier");
  int top = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const int v = blocks[i];
    if (v < 1 || v > top + 1)
      throw error(errc::bad_grading,
                  "block labels must be 1..p in order of first occurrence (position " +
                      std::to_string(i) + " has label " + std::to_string(v) + ")",
                  static_cast<long>(i));
    top = std::max(top, v);
  }
  Grading g;
  g.block = std::move(blocks);
  g.p = top;
  return g;
}

}  // namespace birack
