#include "birack/linalg.hpp"

#include <limits>
#include <numeric>
#include <unordered_map>

#include "birack/base.hpp"

namespace birack {

void normalize_row(SparseRow& row) {
  auto& t = row.terms;
  std::erase_if(t, [](const auto& e) { return e.second == 0; });
  if (t.empty()) return;
  std::uint64_t g = 0;
  for (const auto& [col, c] : t)
    g = std::gcd(g, c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c));
  const std::int64_t sign = t.front().second < 0 ? -1 : 1;
  for (auto& [col, c] : t) c = sign * (c / static_cast<std::int64_t>(g));
}

namespace {

// pivot has positive leading coefficient; the result has the pivot's leading
// column eliminated and is normalized.
SparseRow eliminate_leading(const SparseRow& row, const SparseRow& pivot) {
  const __int128 a = row.terms.front().second;
  const __int128 b = pivot.terms.front().second;
  SparseRow out;
  out.terms.reserve(row.terms.size() + pivot.terms.size());
  size_t i = 0, j = 0;
  auto push = [&](std::uint64_t col, __int128 v) {
    if (v == 0) return;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw error(errc::overflow, "coefficient exceeds 64-bit range in exact elimination");
    out.terms.emplace_back(col, static_cast<std::int64_t>(v));
  };
  while (i < row.terms.size() || j < pivot.terms.size()) {
    if (j == pivot.terms.size() ||
        (i < row.terms.size() && row.terms[i].first < pivot.terms[j].first)) {
      push(row.terms[i].first, b * row.terms[i].second);
      ++i;
    } else if (i == row.terms.size() || pivot.terms[j].first < row.terms[i].first) {
      push(pivot.terms[j].first, -a * pivot.terms[j].second);
      ++j;
    } else {
      push(row.terms[i].first, b * row.terms[i].second - a * pivot.terms[j].second);
      ++i;
      ++j;
    }
  }
  normalize_row(out);
  return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

}  // namespace

int exact_rank(std::vector<SparseRow> rows) {
  std::unordered_map<std::uint64_t, SparseRow> pivots;
  int rank = 0;
  for (auto& row : rows) {
    normalize_row(row);
    while (!row.empty()) {
      const auto it = pivots.find(row.terms.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.terms.front().first, std::move(row));
        ++rank;
        break;
      }
      row = eliminate_leading(row, it->second);
    }
  }
  return rank;
}

int modular_rank(const std::vector<SparseRow>& rows) {
  const std::uint64_t p = kRankPrime;
  using ModRow = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  std::unordered_map<std::uint64_t, ModRow> pivots;  // leading coefficient scaled to 1
  int rank = 0;
  for (const SparseRow& in : rows) {
    ModRow row;
    row.reserve(in.terms.size());
    for (const auto& [col, c] : in.terms) {
      const std::uint64_t v =
          c < 0 ? p - static_cast<std::uint64_t>(-(c % static_cast<std::int64_t>(p)))
                : static_cast<std::uint64_t>(c) % p;
      if (v % p != 0) row.emplace_back(col, v % p);
    }
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = mod_pow(row.front().second, p - 2, p);
        for (auto& [col, v] : row) v = v * inv % p;
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        break;
      }
      // row -= lead(row) * pivot
      const std::uint64_t a = row.front().second;
      const ModRow& piv = it->second;
      ModRow next;
      next.reserve(row.size() + piv.size());
      size_t i = 0, j = 0;
      auto push = [&](std::uint64_t col, std::uint64_t v) {
        if (v % p) next.emplace_back(col, v % p);
      };
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          push(row[i].first, row[i].second);
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          push(piv[j].first, p - a * piv[j].second % p);
          ++j;
        } else {
          push(row[i].first, row[i].second + p - a * piv[j].second % p);
          ++i;
          ++j;
        }
      }
      row = std::move(next);
    }
  }
  return rank;
}

int checked_rank(std::vector<SparseRow> rows) {
  const int modular = modular_rank(rows);
  const int exact = exact_rank(std::move(rows));
  if (exact != modular)
    throw error(errc::rank_mismatch,
                "exact rank " + std::to_string(exact) + " != modular rank " +
                    std::to_string(modular));
  return exact;
}

}  // namespace birack
