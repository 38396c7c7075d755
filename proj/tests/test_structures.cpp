#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birack/quasigroup.hpp"
#include "oracles.hpp"

using namespace birack;

namespace {

LeftQuasigroup random_lq(int n, std::mt19937& rng) {
  Table t;
  for (int x = 0; x < n; ++x) {
    Perm row = identity_perm(n);
    std::shuffle(row.begin(), row.end(), rng);
    t.push_back(std::move(row));
  }
  return validate_left_quasigroup(t);
}

Table conjugate(const Table& t, const Perm& f) {
  const int n = static_cast<int>(t.size());
  const Perm fi = inverse_perm(f);
  Table out(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[x][y] = f[t[fi[x]][fi[y]]];
  return out;
}

}  // namespace

TEST_CASE("validate_left_quasigroup materializes row inverses") {
  const LeftQuasigroup triv = validate_left_quasigroup(oracles::kTrivial2);
  CHECK(triv.ldiv == Table{{0, 1}, {0, 1}});

  const LeftQuasigroup p2 = validate_left_quasigroup(oracles::kP2);
  CHECK(p2.ldiv == Table{{1, 0}, {1, 0}});

  try {
    validate_left_quasigroup(Table{{0, 0}, {0, 1}});
    FAIL("expected row_not_bijective");
  } catch (const error& e) {
    CHECK(e.code() == errc::row_not_bijective);
    CHECK(e.detail() == 0);
  }
}

TEST_CASE("validate_right_quasigroup materializes column inverses") {
  const RightQuasigroup proj = validate_right_quasigroup(Table{{0, 0}, {1, 1}});
  CHECK(proj.rdiv == Table{{0, 0}, {1, 1}});

  const RightQuasigroup swap = validate_right_quasigroup(Table{{1, 1}, {0, 0}});
  CHECK(swap.rdiv == Table{{1, 1}, {0, 0}});

  try {
    validate_right_quasigroup(Table{{0, 1}, {0, 1}});
    FAIL("expected column_not_bijective");
  } catch (const error& e) {
    CHECK(e.code() == errc::column_not_bijective);
    CHECK(e.detail() == 0);
  }
}

TEST_CASE("is_nondegenerate") {
  CHECK(is_nondegenerate(validate_left_quasigroup(oracles::kTrivial2)));
  CHECK(is_nondegenerate(validate_left_quasigroup(oracles::kP2)));
  CHECK_FALSE(is_nondegenerate(validate_left_quasigroup(oracles::kNotRightCyclic)));
}

TEST_CASE("is_right_cyclic") {
  CHECK(is_right_cyclic(validate_left_quasigroup(oracles::kP2)));
  CHECK(is_right_cyclic(validate_left_quasigroup(oracles::kTrivial2)));
  CHECK_FALSE(is_right_cyclic(validate_left_quasigroup(oracles::kNotRightCyclic)));
}

TEST_CASE("right cyclicity matches the three-variable identity on random tables") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const LeftQuasigroup q = random_lq(2 + trial % 4, rng);
    CHECK(is_right_cyclic(q) == oracles::naive_right_cyclic(q.circ));
  }
}

TEST_CASE("is_graded") {
  const LeftQuasigroup d4 = validate_left_quasigroup(oracles::kD4);
  CHECK(is_graded(d4, Grading::from_blocks({1, 1, 2, 2})));
  CHECK_FALSE(is_graded(d4, Grading::from_blocks({1, 2, 1, 2})));
  CHECK(is_graded(d4, Grading::trivial(4)));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const LeftQuasigroup q = random_lq(2 + trial % 5, rng);
    CHECK(is_graded(q, Grading::trivial(q.n)));
  }
}

TEST_CASE("grading labels are 1..p in first-occurrence order") {
  CHECK(Grading::from_blocks({1, 1, 2, 2}).p == 2);
  CHECK(Grading::from_blocks({1, 2, 1, 3}).p == 3);
  CHECK_THROWS_AS(Grading::from_blocks({2, 1}), error);       // starts above 1
  CHECK_THROWS_AS(Grading::from_blocks({1, 3, 2}), error);    // skips a label
  CHECK_THROWS_AS(Grading::from_blocks({0, 1}), error);
  CHECK_THROWS_AS(Grading::from_blocks({}), error);
}

TEST_CASE("is_automorphism") {
  const LeftQuasigroup p2 = validate_left_quasigroup(oracles::kP2);
  CHECK(is_automorphism(p2, Perm{1, 0}));
  CHECK(is_automorphism(p2, identity_perm(2)));

  const LeftQuasigroup d4 = validate_left_quasigroup(oracles::kD4);
  CHECK_FALSE(is_automorphism(d4, Perm{2, 3, 0, 1}, Grading::from_blocks({1, 1, 2, 2})));

  // automorphisms are closed under composition
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const LeftQuasigroup q = random_lq(n, rng);
    std::vector<Perm> autos;
    Perm f = identity_perm(n);
    do {
      if (is_automorphism(q, f)) autos.push_back(f);
    } while (std::next_permutation(f.begin(), f.end()));
    for (const Perm& a : autos)
      for (const Perm& b : autos) CHECK(is_automorphism(q, compose(a, b)));
  }
}

TEST_CASE("translations compose with their division inverses to the identity") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const LeftQuasigroup q = random_lq(1 + trial % 6, rng);
    for (int x = 0; x < q.n; ++x) {
      CHECK(compose(q.circ[x], q.ldiv[x]) == identity_perm(q.n));
      CHECK(compose(q.ldiv[x], q.circ[x]) == identity_perm(q.n));
    }
  }
}

TEST_CASE("right cyclicity is invariant under relabelling") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 4;
    const LeftQuasigroup q = random_lq(n, rng);
    Perm f = identity_perm(n);
    std::shuffle(f.begin(), f.end(), rng);
    const LeftQuasigroup qc = validate_left_quasigroup(conjugate(q.circ, f));
    CHECK(is_right_cyclic(q) == is_right_cyclic(qc));
  }
}

TEST_CASE("singleton carrier is accepted everywhere") {
  const LeftQuasigroup one = validate_left_quasigroup(Table{{0}});
  CHECK(is_nondegenerate(one));
  CHECK(is_right_cyclic(one));
  CHECK(is_graded(one, Grading::trivial(1)));
  CHECK(is_automorphism(one, Perm{0}));
}
