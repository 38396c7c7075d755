#pragma once

#include <cstdint>

#include "birack/isotope.hpp"
#include "birack/linalg.hpp"

namespace birack {

// Integer vector in the span of the n^2 basis tensors x (x) y, sparsely
// stored with keys x*n + y sorted ascending.  Canonical form: content 1,
// first nonzero coefficient positive.
struct TensorVector {
  std::vector<std::pair<std::int32_t, std::int64_t>> terms;

  friend bool operator==(const TensorVector&, const TensorVector&) = default;
  friend auto operator<=>(const TensorVector&, const TensorVector&) = default;
};

TensorVector make_tensor(std::vector<std::pair<std::int32_t, std::int64_t>> terms);

struct QuadraticRelationSet {
  int n = 0;
  std::vector<TensorVector> relations;  // canonical, deduplicated, sorted

  friend bool operator==(const QuadraticRelationSet&, const QuadraticRelationSet&) = default;
};

// Canonicalizes, drops zero vectors, dedupes up to sign and sorts.
QuadraticRelationSet make_relation_set(int n, std::vector<TensorVector> rels);

// x (x) y - (x o y) (x) (x • y) over the pairs not fixed by r.  For an
// involutive birack the set has (n^2 - #fixed)/2 elements.
QuadraticRelationSet quadratic_relations(const Birack& b);

// Applies x (x) y -> x (x) phi_{block[x]}^{-1}(y) to every relation: the
// defining set of the Zhang twist presented on the same generators.
QuadraticRelationSet twist_relations(const QuadraticRelationSet& r, const TwistSystem& t);

// rank(R1) = rank(R2) = rank(R1 u R2), ranks by exact elimination with the
// modular guard.
bool span_equal(const QuadraticRelationSet& a, const QuadraticRelationSet& b);

struct TheoremCertificate {
  bool setwise_equal = false;
  bool spans_equal = false;
  QuadraticRelationSet isotope_relations;  // relations of the isotope's algebra
  QuadraticRelationSet twisted_relations;  // relations after the twist substitution

  bool ok() const { return setwise_equal && spans_equal; }
};

// Certifies that the isotope's algebra is presented by the twisted relation
// set: elementwise equality of the canonical sets plus span equality.
TheoremCertificate verify_theorem1(const Birack& b, const TwistSystem& t);

using Word = std::vector<int>;

// Letter counts per block, indexed 0..p-1.
std::vector<int> multidegree(const Word& w, const Grading& g);

// a * b = a phi^{|a|}(b), phi applied letterwise.
Word star_product(const Word& a, const Word& b, const TwistSystem& t);

struct HilbertOptions {
  // Cap on stored entries of the degree-d shift matrix.
  std::uint64_t max_entries = 10'000'000;
  bool modular_guard = true;
};

// dims[d] for d = 0..d_max.
using HilbertTable = std::vector<std::uint64_t>;

// dims[d] = n^d - rank of all shifts of the relations into degree d.
HilbertTable hilbert_function(const QuadraticRelationSet& r, int d_max,
                              const HilbertOptions& opts = {});

// Commutative reference: dims[d] = C(n + d - 1, d).
HilbertTable polynomial_hilbert(int n, int d_max);

}  // namespace birack
