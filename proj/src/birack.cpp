#include "birack/birack.hpp"

namespace birack {

Birack birack_from_tables(const Table& circ, const Table& bullet) {
  const LeftQuasigroup lq = validate_left_quasigroup(circ);
  if (table_size(bullet) != lq.n)
    throw error(errc::shape_mismatch, "circ and bullet differ in size");
  const RightQuasigroup rq = validate_right_quasigroup(bullet);
  return {lq.circ, lq.ldiv, rq.bullet, rq.rdiv, lq.n};
}

Birack derive_birack(const LeftQuasigroup& q) {
  if (!is_right_cyclic(q))
    throw error(errc::not_right_cyclic, "left quasigroup is not right cyclic");
  if (!is_nondegenerate(q))
    throw error(errc::not_nondegenerate, "left quasigroup is not non-degenerate");
  Table bullet(q.n, std::vector<int>(q.n, 0));
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y) bullet[x][y] = q.ldiv[q.circ[x][y]][x];
  const RightQuasigroup rq = validate_right_quasigroup(bullet);
  return {q.circ, q.ldiv, rq.bullet, rq.rdiv, q.n};
}

std::string BirackCheck::describe() const {
  if (ok) return "birack axioms hold";
  switch (axiom) {
    case Axiom::left_rows:
      return "left quasigroup axiom fails at row " + std::to_string(x);
    case Axiom::right_columns:
      return "right quasigroup axiom fails at column " + std::to_string(x);
    case Axiom::identity1:
    case Axiom::identity2:
    case Axiom::identity3: {
      const int k = axiom == Axiom::identity1 ? 1 : axiom == Axiom::identity2 ? 2 : 3;
      return "birack identity " + std::to_string(k) + " fails at (" + std::to_string(x) +
             "," + std::to_string(y) + "," + std::to_string(z) + ")";
    }
    default: return "invalid";
  }
}

BirackCheck verify_birack(const Birack& b) {
  const int n = b.n;
  BirackCheck res;
  auto fail = [&](BirackCheck::Axiom a, int x, int y = -1, int z = -1) {
    res.ok = false;
    res.axiom = a;
    res.x = x;
    res.y = y;
    res.z = z;
    return res;
  };

  if (!table_shaped(b.circ) || !table_shaped(b.ldiv) || !table_shaped(b.bullet) ||
      !table_shaped(b.rdiv) || table_size(b.circ) != n || table_size(b.ldiv) != n ||
      table_size(b.bullet) != n || table_size(b.rdiv) != n)
    throw error(errc::shape_mismatch, "birack tables are not four n x n tables");

  for (int x = 0; x < n; ++x) {
    if (!is_permutation(b.circ[x])) return fail(BirackCheck::Axiom::left_rows, x);
    for (int y = 0; y < n; ++y)
      if (b.ldiv[x][b.circ[x][y]] != y || b.circ[x][b.ldiv[x][y]] != y)
        return fail(BirackCheck::Axiom::left_rows, x);
  }
  for (int y = 0; y < n; ++y) {
    Perm col(n);
    for (int x = 0; x < n; ++x) col[x] = b.bullet[x][y];
    if (!is_permutation(col)) return fail(BirackCheck::Axiom::right_columns, y);
    for (int x = 0; x < n; ++x)
      if (b.rdiv[b.bullet[x][y]][y] != x || b.bullet[b.rdiv[x][y]][y] != x)
        return fail(BirackCheck::Axiom::right_columns, y);
  }

  const Table& c = b.circ;
  const Table& u = b.bullet;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (c[x][c[y][z]] != c[c[x][y]][c[u[x][y]][z]])
          return fail(BirackCheck::Axiom::identity1, x, y, z);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (u[c[x][y]][c[u[x][y]][z]] != c[u[x][c[y][z]]][u[y][z]])
          return fail(BirackCheck::Axiom::identity2, x, y, z);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (u[u[x][y]][z] != u[u[x][c[y][z]]][u[y][z]])
          return fail(BirackCheck::Axiom::identity3, x, y, z);
  return res;
}

bool is_involutive(const Birack& b) {
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y) {
      const int c = b.circ[x][y];
      const int u = b.bullet[x][y];
      if (b.circ[c][u] != x || b.bullet[c][u] != y) return false;
    }
  return true;
}

bool satisfies_lri(const Birack& b) {
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y)
      if (b.bullet[b.circ[x][y]][x] != y || b.circ[x][b.bullet[y][x]] != y) return false;
  return true;
}

bool is_distributive(const LeftQuasigroup& q) {
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      for (int z = 0; z < q.n; ++z)
        if (q.circ[x][q.circ[y][z]] != q.circ[q.circ[x][y]][q.circ[x][z]]) return false;
  return true;
}

bool is_distributive(const Birack& b) {
  if (!is_distributive(b.left())) return false;
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y)
      for (int z = 0; z < b.n; ++z)
        if (b.bullet[b.bullet[y][z]][x] != b.bullet[b.bullet[y][x]][b.bullet[z][x]])
          return false;
  return true;
}

bool is_two_reductive(const LeftQuasigroup& q) {
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (q.circ[q.circ[x][y]] != q.circ[y]) return false;
  return true;
}

Grading l_equivalence_partition(const LeftQuasigroup& q) {
  std::vector<int> block(q.n, 0);
  int p = 0;
  for (int x = 0; x < q.n; ++x) {
    for (int y = 0; y < x; ++y)
      if (q.circ[y] == q.circ[x]) {
        block[x] = block[y];
        break;
      }
    if (block[x] == 0) block[x] = ++p;
  }
  Grading g;
  g.block = std::move(block);
  g.p = p;
  return g;
}

bool is_graded(const Birack& b, const Grading& g) {
  if (g.n() != b.n) throw error(errc::shape_mismatch, "grading length differs from carrier size");
  for (int x = 0; x < b.n; ++x)
    for (int y = 0; y < b.n; ++y)
      if (g.block[b.circ[x][y]] != g.block[y] || g.block[b.bullet[y][x]] != g.block[y])
        return false;
  return true;
}

}  // namespace birack
