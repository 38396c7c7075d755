#pragma once

#include <optional>

#include "birack/birack.hpp"

namespace birack {

// A sequence phi_1..phi_p of bijections of the carrier, one per block.
// Invariants (checked by validate_twist_system): pairwise commuting and
// degree-preserving.
struct TwistSystem {
  std::vector<Perm> phis;
  Grading grading;

  int n() const { return grading.n(); }
  int p() const { return grading.p; }

  friend bool operator==(const TwistSystem&, const TwistSystem&) = default;
};

struct TwistVerdict {
  bool graded = false;             // the structure is graded w.r.t. the grading
  bool bijective = false;          // every phi_s is a permutation
  bool degree_preserving = false;  // block[phi_s(x)] = block[x]
  bool commuting = false;          // phi_s phi_t = phi_t phi_s
  // Checked only under strong validation:
  std::optional<bool> automorphisms;       // each phi_s is a graded automorphism
  std::optional<bool> translation_stable;  // L_{phi_s(x)} = L_x

  bool ok() const {
    return graded && bijective && degree_preserving && commuting &&
           automorphisms.value_or(true) && translation_stable.value_or(true);
  }
  std::vector<std::string> failures() const;
};

// Throws shape_mismatch when p or n disagree; everything else is reported
// in the verdict.
TwistVerdict validate_twist_system(const LeftQuasigroup& q, const TwistSystem& t,
                                   bool require_strong);

// x * y = x o phi^{|x|}(y).  Requires weak validation; the result carries
// the same grading and is non-degenerate whenever q is.
LeftQuasigroup isotope_quasigroup(const LeftQuasigroup& q, const TwistSystem& t);

// The isotope birack (*, \*, <>, /<>) with x <> y = phi^{-|y|}(x • phi^{|x|}(y)).
// Requires b involutive, graded, with lri, and strong validation of t.
Birack isotope_birack(const Birack& b, const TwistSystem& t);

// L-class grading with phi_s = L_{x_s}^{-1}, x_s the least element of class
// s.  The isotope of an involutive distributive birack by this system is the
// projection birack.
TwistSystem canonical_distributive_twist(const Birack& b);

}  // namespace birack
