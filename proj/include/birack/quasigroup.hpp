#pragma once

#include "birack/base.hpp"

namespace birack {

// (X, o, \o): every left translation L_x = circ[x] is a bijection and
// ldiv[x] is its inverse, so x o (x \o y) = y = x \o (x o y).
struct LeftQuasigroup {
  Table circ;
  Table ldiv;
  int n = 0;
};

// (X, •, /•): every right translation R_y = column y of bullet is a
// bijection and column y of rdiv is its inverse.
struct RightQuasigroup {
  Table bullet;
  Table rdiv;
  int n = 0;
};

// Materializes ldiv as the row-wise inverse permutations.
// Throws row_not_bijective(x) on the first repeating row.
LeftQuasigroup validate_left_quasigroup(const Table& circ);

// Materializes rdiv as the column-wise inverse permutations.
// Throws column_not_bijective(y) on the first repeating column.
RightQuasigroup validate_right_quasigroup(const Table& bullet);

// x -> x \o x is a bijection of the carrier.
bool is_nondegenerate(const LeftQuasigroup& q);

// L_x L_{x \o y} = L_y L_{y \o x} for all x, y.
bool is_right_cyclic(const LeftQuasigroup& q);

// block[x o y] = block[y] for all x, y: left translations preserve degree.
bool is_graded(const LeftQuasigroup& q, const Grading& g);

// f(x o y) = f(x) o f(y) for all x, y.
bool is_automorphism(const LeftQuasigroup& q, const Perm& f);
// Additionally f preserves every block.
bool is_automorphism(const LeftQuasigroup& q, const Perm& f, const Grading& g);

}  // namespace birack
