#include "birack/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace birack {

TensorVector make_tensor(std::vector<std::pair<std::int32_t, std::int64_t>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicate keys
  std::vector<std::pair<std::int32_t, std::int64_t>> merged;
  for (const auto& [k, c] : terms) {
    if (!merged.empty() && merged.back().first == k)
      merged.back().second += c;
    else
      merged.emplace_back(k, c);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  if (!merged.empty()) {
    std::uint64_t g = 0;
    for (const auto& [k, c] : merged)
      g = std::gcd(g, c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1
                            : static_cast<std::uint64_t>(c));
    const std::int64_t sign = merged.front().second < 0 ? -1 : 1;
    for (auto& [k, c] : merged) c = sign * (c / static_cast<std::int64_t>(g));
  }
  return {std::move(merged)};
}

QuadraticRelationSet make_relation_set(int n, std::vector<TensorVector> rels) {
  if (n < 1) throw error(errc::shape_mismatch, "relation set needs n >= 1 generators");
  std::vector<TensorVector> canon;
  canon.reserve(rels.size());
  for (TensorVector& v : rels) {
    for (const auto& [k, c] : v.terms)
      if (k < 0 || k >= static_cast<std::int32_t>(n) * n)
        throw error(errc::shape_mismatch, "tensor key out of range for n generators");
    TensorVector w = make_tensor(std::move(v.terms));
    if (!w.terms.empty()) canon.push_back(std::move(w));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return {n, std::move(canon)};
}

QuadraticRelationSet quadratic_relations(const Birack& b) {
  if (const auto check = verify_birack(b); !check)
    throw error(errc::not_a_birack, check.describe());
  const int n = b.n;
  std::vector<TensorVector> rels;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int c = b.circ[x][y];
      const int u = b.bullet[x][y];
      if (c == x && u == y) continue;  // fixed pair, zero relation
      rels.push_back(make_tensor({{x * n + y, 1}, {c * n + u, -1}}));
    }
  return make_relation_set(n, std::move(rels));
}

QuadraticRelationSet twist_relations(const QuadraticRelationSet& r, const TwistSystem& t) {
  const int n = r.n;
  if (t.grading.n() != n)
    throw error(errc::shape_mismatch, "grading length differs from generator count");
  if (static_cast<int>(t.phis.size()) != t.p())
    throw error(errc::shape_mismatch, "expected one phi per block");
  std::vector<Perm> phi_inv;
  phi_inv.reserve(t.phis.size());
  for (const Perm& f : t.phis) {
    if (static_cast<int>(f.size()) != n)
      throw error(errc::shape_mismatch, "phi length differs from generator count");
    if (!is_permutation(f))
      throw error(errc::hypothesis_violated, "some phi_s is not a bijection");
    phi_inv.push_back(inverse_perm(f));
  }
  std::vector<TensorVector> out;
  out.reserve(r.relations.size());
  for (const TensorVector& v : r.relations) {
    std::vector<std::pair<std::int32_t, std::int64_t>> terms;
    terms.reserve(v.terms.size());
    for (const auto& [k, c] : v.terms) {
      const int x = k / n, y = k % n;
      terms.emplace_back(x * n + phi_inv[t.grading.block[x] - 1][y], c);
    }
    out.push_back(make_tensor(std::move(terms)));
  }
  return make_relation_set(n, std::move(out));
}

namespace {

std::vector<SparseRow> tensor_rows(const QuadraticRelationSet& r) {
  std::vector<SparseRow> rows;
  rows.reserve(r.relations.size());
  for (const TensorVector& v : r.relations) {
    SparseRow row;
    row.terms.reserve(v.terms.size());
    for (const auto& [k, c] : v.terms)
      row.terms.emplace_back(static_cast<std::uint64_t>(k), c);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool span_equal(const QuadraticRelationSet& a, const QuadraticRelationSet& b) {
  if (a.n != b.n) throw error(errc::shape_mismatch, "relation sets over different generator counts");
  std::vector<SparseRow> ra = tensor_rows(a);
  std::vector<SparseRow> rb = tensor_rows(b);
  std::vector<SparseRow> rab = ra;
  rab.insert(rab.end(), rb.begin(), rb.end());
  const int rank_a = checked_rank(std::move(ra));
  const int rank_b = checked_rank(std::move(rb));
  const int rank_ab = checked_rank(std::move(rab));
  return rank_a == rank_b && rank_b == rank_ab;
}

TheoremCertificate verify_theorem1(const Birack& b, const TwistSystem& t) {
  // isotope_birack re-checks the full hypothesis list and throws
  // hypothesis_violated naming every failed condition.
  const Birack iso = isotope_birack(b, t);
  TheoremCertificate cert;
  cert.isotope_relations = quadratic_relations(iso);
  cert.twisted_relations = twist_relations(quadratic_relations(b), t);
  cert.setwise_equal = cert.isotope_relations == cert.twisted_relations;
  cert.spans_equal = span_equal(cert.isotope_relations, cert.twisted_relations);
  return cert;
}

std::vector<int> multidegree(const Word& w, const Grading& g) {
  std::vector<int> deg(g.p, 0);
  for (int letter : w) {
    if (letter < 0 || letter >= g.n())
      throw error(errc::shape_mismatch, "word letter out of range");
    ++deg[g.block[letter] - 1];
  }
  return deg;
}

Word star_product(const Word& a, const Word& b, const TwistSystem& t) {
  const int n = t.n();
  if (static_cast<int>(t.phis.size()) != t.p())
    throw error(errc::shape_mismatch, "expected one phi per block");
  for (const Perm& phi : t.phis)
    if (static_cast<int>(phi.size()) != n || !is_permutation(phi))
      throw error(errc::hypothesis_violated, "some phi_s is not a bijection of the carrier");
  Perm f = identity_perm(n);
  const std::vector<int> deg = multidegree(a, t.grading);
  for (int s = 0; s < t.p(); ++s)
    for (int k = 0; k < deg[s]; ++k) f = compose(t.phis[s], f);
  Word out = a;
  out.reserve(a.size() + b.size());
  for (int letter : b) {
    if (letter < 0 || letter >= n) throw error(errc::shape_mismatch, "word letter out of range");
    out.push_back(f[letter]);
  }
  return out;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw error(errc::overflow, "n^d exceeds the 64-bit range");
    r *= base;
  }
  return r;
}

}  // namespace

HilbertTable hilbert_function(const QuadraticRelationSet& r, int d_max,
                              const HilbertOptions& opts) {
  if (d_max < 0) throw error(errc::shape_mismatch, "d_max must be non-negative");
  const std::uint64_t n = static_cast<std::uint64_t>(r.n);
  HilbertTable dims;
  dims.reserve(d_max + 1);
  dims.push_back(1);
  if (d_max >= 1) dims.push_back(n);

  std::uint64_t support = 0;
  for (const TensorVector& v : r.relations) support += v.terms.size();

  for (int d = 2; d <= d_max; ++d) {
    const std::uint64_t words = checked_pow(n, d);
    const std::uint64_t shifts = static_cast<std::uint64_t>(d - 1) * checked_pow(n, d - 2);
    if (support != 0 && shifts > opts.max_entries / support)
      throw error(errc::budget_exceeded,
                  "degree " + std::to_string(d) + " shift matrix exceeds the entry cap", d);

    std::vector<SparseRow> rows;
    rows.reserve(static_cast<size_t>(shifts) * r.relations.size());
    for (int i = 0; i <= d - 2; ++i) {
      const std::uint64_t left = checked_pow(n, i);
      const std::uint64_t right = checked_pow(n, d - 2 - i);
      for (std::uint64_t w1 = 0; w1 < left; ++w1)
        for (std::uint64_t w2 = 0; w2 < right; ++w2)
          for (const TensorVector& v : r.relations) {
            SparseRow row;
            row.terms.reserve(v.terms.size());
            for (const auto& [k, c] : v.terms)
              row.terms.emplace_back((w1 * n * n + static_cast<std::uint64_t>(k)) * right + w2,
                                     c);
            rows.push_back(std::move(row));
          }
    }
    const int rank = opts.modular_guard ? checked_rank(std::move(rows))
                                        : exact_rank(std::move(rows));
    dims.push_back(words - static_cast<std::uint64_t>(rank));
  }
  return dims;
}

HilbertTable polynomial_hilbert(int n, int d_max) {
  if (n < 1) throw error(errc::shape_mismatch, "polynomial algebra needs n >= 1");
  if (d_max < 0) throw error(errc::shape_mismatch, "d_max must be non-negative");
  HilbertTable dims;
  dims.reserve(d_max + 1);
  for (int d = 0; d <= d_max; ++d) {
    // C(n + d - 1, d), built multiplicatively to stay exact.
    std::uint64_t v = 1;
    for (int i = 1; i <= d; ++i) {
      const unsigned __int128 t = static_cast<unsigned __int128>(v) * (n - 1 + i);
      if (t / i > std::numeric_limits<std::uint64_t>::max())
        throw error(errc::overflow, "binomial exceeds the 64-bit range");
      v = static_cast<std::uint64_t>(t / i);
    }
    dims.push_back(v);
  }
  return dims;
}

}  // namespace birack
