#pragma once

#include "birack/quasigroup.hpp"

namespace birack {

// Four-operation algebra (X, o, \o, •, /•).  The mixed identities are
// checked by verify_birack, not by construction.
struct Birack {
  Table circ, ldiv, bullet, rdiv;
  int n = 0;

  LeftQuasigroup left() const { return {circ, ldiv, n}; }

  friend bool operator==(const Birack&, const Birack&) = default;
};

// Builds divisions for raw (circ, bullet) tables; quasigroup axioms are
// enforced, the birack identities are not.
Birack birack_from_tables(const Table& circ, const Table& bullet);

// x • y = (x o y) \o x.  Requires right cyclic and non-degenerate; the
// result is always an involutive birack.
Birack derive_birack(const LeftQuasigroup& q);

struct BirackCheck {
  enum class Axiom { none, left_rows, right_columns, identity1, identity2, identity3 };
  bool ok = true;
  Axiom axiom = Axiom::none;
  // First failing triple in scan order (identity number, then lexicographic
  // (x,y,z)); for quasigroup axioms x holds the row/column index.
  int x = -1, y = -1, z = -1;

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

// Quasigroup axioms plus the three mixed identities over all triples:
//   x o (y o z)            = (x o y) o ((x • y) o z)
//   (x o y) • ((x • y) o z) = (x • (y o z)) o (y • z)
//   (x • y) • z            = (x • (y o z)) • (y • z)
BirackCheck verify_birack(const Birack& b);

// (x o y) o (x • y) = x and (x o y) • (x • y) = y.
bool is_involutive(const Birack& b);

// R_x = L_x^{-1}: (x o y) • x = y and x o (y • x) = y.
bool satisfies_lri(const Birack& b);

// L_x L_y = L_{x o y} L_x.
bool is_distributive(const LeftQuasigroup& q);
// Adds the mirrored identity (y • z) • x = (y • x) • (z • x).
bool is_distributive(const Birack& b);

// L_{x o y} = L_y.
bool is_two_reductive(const LeftQuasigroup& q);

// Classes of equal left translations, numbered by first occurrence.
Grading l_equivalence_partition(const LeftQuasigroup& q);

// Graded birack: x o y and y • x stay in the block of y.
bool is_graded(const Birack& b, const Grading& g);

}  // namespace birack
