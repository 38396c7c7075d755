#include "birack/quasigroup.hpp"

namespace birack {

LeftQuasigroup validate_left_quasigroup(const Table& circ) {
  const int n = table_size(circ);
  LeftQuasigroup q;
  q.n = n;
  q.circ = circ;
  q.ldiv.resize(n);
  for (int x = 0; x < n; ++x) {
    if (!is_permutation(circ[x]))
      throw error(errc::row_not_bijective,
                  "row " + std::to_string(x) + " is not a bijection", x);
    q.ldiv[x] = inverse_perm(circ[x]);
  }
  return q;
}

RightQuasigroup validate_right_quasigroup(const Table& bullet) {
  const int n = table_size(bullet);
  RightQuasigroup q;
  q.n = n;
  q.bullet = bullet;
  q.rdiv.assign(n, std::vector<int>(n, 0));
  for (int y = 0; y < n; ++y) {
    Perm col(n);
    for (int x = 0; x < n; ++x) col[x] = bullet[x][y];
    if (!is_permutation(col))
      throw error(errc::column_not_bijective,
                  "column " + std::to_string(y) + " is not a bijection", y);
    const Perm inv = inverse_perm(col);
    for (int x = 0; x < n; ++x) q.rdiv[x][y] = inv[x];
  }
  return q;
}

bool is_nondegenerate(const LeftQuasigroup& q) {
  Perm d(q.n);
  for (int x = 0; x < q.n; ++x) d[x] = q.ldiv[x][x];
  return is_permutation(d);
}

bool is_right_cyclic(const LeftQuasigroup& q) {
  for (int x = 0; x < q.n; ++x) {
    for (int y = 0; y < q.n; ++y) {
      const int a = q.ldiv[x][y];
      const int b = q.ldiv[y][x];
      // L_x L_a = L_y L_b, compared pointwise.
      for (int z = 0; z < q.n; ++z)
        if (q.circ[x][q.circ[a][z]] != q.circ[y][q.circ[b][z]]) return false;
    }
  }
  return true;
}

bool is_graded(const LeftQuasigroup& q, const Grading& g) {
  if (g.n() != q.n) throw error(errc::shape_mismatch, "grading length differs from carrier size");
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (g.block[q.circ[x][y]] != g.block[y]) return false;
  return true;
}

bool is_automorphism(const LeftQuasigroup& q, const Perm& f) {
  if (static_cast<int>(f.size()) != q.n)
    throw error(errc::shape_mismatch, "map length differs from carrier size");
  if (!is_permutation(f)) return false;
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (f[q.circ[x][y]] != q.circ[f[x]][f[y]]) return false;
  return true;
}

bool is_automorphism(const LeftQuasigroup& q, const Perm& f, const Grading& g) {
  if (g.n() != q.n) throw error(errc::shape_mismatch, "grading length differs from carrier size");
  if (!is_automorphism(q, f)) return false;
  for (int x = 0; x < q.n; ++x)
    if (g.block[f[x]] != g.block[x]) return false;
  return true;
}

}  // namespace birack
