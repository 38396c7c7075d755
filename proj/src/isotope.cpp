#include "birack/isotope.hpp"

namespace birack {

std::vector<std::string> TwistVerdict::failures() const {
  std::vector<std::string> out;
  if (!graded) out.push_back("structure is not graded for the given grading");
  if (!bijective) out.push_back("some phi_s is not a bijection");
  if (!degree_preserving) out.push_back("some phi_s is not degree-preserving");
  if (!commuting) out.push_back("the phi_s do not pairwise commute");
  if (automorphisms && !*automorphisms) out.push_back("some phi_s is not an automorphism");
  if (translation_stable && !*translation_stable)
    out.push_back("L_{phi_s(x)} = L_x fails for some s, x");
  return out;
}

TwistVerdict validate_twist_system(const LeftQuasigroup& q, const TwistSystem& t,
                                   bool require_strong) {
  if (t.grading.n() != q.n)
    throw error(errc::shape_mismatch, "grading length differs from carrier size");
  if (static_cast<int>(t.phis.size()) != t.p())
    throw error(errc::shape_mismatch, "expected one phi per block");
  for (const Perm& f : t.phis)
    if (static_cast<int>(f.size()) != q.n)
      throw error(errc::shape_mismatch, "phi length differs from carrier size");

  TwistVerdict v;
  v.graded = is_graded(q, t.grading);

  v.bijective = true;
  for (const Perm& f : t.phis)
    if (!is_permutation(f)) v.bijective = false;
  if (!v.bijective) return v;

  v.degree_preserving = true;
  for (const Perm& f : t.phis)
    for (int x = 0; x < q.n; ++x)
      if (t.grading.block[f[x]] != t.grading.block[x]) v.degree_preserving = false;

  v.commuting = true;
  for (size_t s = 0; s < t.phis.size(); ++s)
    for (size_t u = s + 1; u < t.phis.size(); ++u)
      if (compose(t.phis[s], t.phis[u]) != compose(t.phis[u], t.phis[s])) v.commuting = false;

  if (require_strong) {
    bool autos = true, stable = true;
    for (const Perm& f : t.phis) {
      if (!is_automorphism(q, f, t.grading)) autos = false;
      for (int x = 0; x < q.n; ++x)
        if (q.circ[f[x]] != q.circ[x]) stable = false;
    }
    v.automorphisms = autos;
    v.translation_stable = stable;
  }
  return v;
}

namespace {

[[noreturn]] void throw_failures(const char* what, const std::vector<std::string>& failures) {
  std::string msg = what;
  for (const auto& f : failures) {
    msg += "; ";
    msg += f;
  }
  throw error(errc::hypothesis_violated, msg);
}

}  // namespace

LeftQuasigroup isotope_quasigroup(const LeftQuasigroup& q, const TwistSystem& t) {
  const TwistVerdict v = validate_twist_system(q, t, /*require_strong=*/false);
  if (!v.ok()) throw_failures("isotope requires a valid twist system", v.failures());
  Table star(q.n, std::vector<int>(q.n, 0));
  for (int x = 0; x < q.n; ++x) {
    const Perm& phi = t.phis[t.grading.block[x] - 1];
    for (int y = 0; y < q.n; ++y) star[x][y] = q.circ[x][phi[y]];
  }
  return validate_left_quasigroup(star);
}

Birack isotope_birack(const Birack& b, const TwistSystem& t) {
  std::vector<std::string> failed;
  if (const auto check = verify_birack(b); !check) failed.push_back(check.describe());
  if (!is_involutive(b)) failed.push_back("birack is not involutive");
  if (!is_graded(b, t.grading)) failed.push_back("birack is not graded for the given grading");
  if (!satisfies_lri(b)) failed.push_back("birack does not satisfy lri");
  const TwistVerdict v = validate_twist_system(b.left(), t, /*require_strong=*/true);
  if (!v.ok())
    for (const auto& f : v.failures()) failed.push_back(f);
  if (!failed.empty()) throw_failures("isotope birack hypotheses violated", failed);

  const int n = b.n;
  Table star(n, std::vector<int>(n, 0));
  Table diamond(n, std::vector<int>(n, 0));
  std::vector<Perm> phi_inv;
  phi_inv.reserve(t.phis.size());
  for (const Perm& f : t.phis) phi_inv.push_back(inverse_perm(f));
  for (int x = 0; x < n; ++x) {
    const Perm& px = t.phis[t.grading.block[x] - 1];
    for (int y = 0; y < n; ++y) {
      star[x][y] = b.circ[x][px[y]];
      diamond[x][y] = phi_inv[t.grading.block[y] - 1][b.bullet[x][px[y]]];
    }
  }
  const LeftQuasigroup lq = validate_left_quasigroup(star);
  const RightQuasigroup rq = validate_right_quasigroup(diamond);
  return {lq.circ, lq.ldiv, rq.bullet, rq.rdiv, n};
}

TwistSystem canonical_distributive_twist(const Birack& b) {
  std::vector<std::string> failed;
  if (const auto check = verify_birack(b); !check) failed.push_back(check.describe());
  if (!is_involutive(b)) failed.push_back("birack is not involutive");
  if (!failed.empty()) throw_failures("canonical twist hypotheses violated", failed);
  if (!is_distributive(b))
    throw error(errc::not_distributive, "birack is not distributive");

  const Grading g = l_equivalence_partition(b.left());
  TwistSystem t;
  t.grading = g;
  t.phis.resize(g.p);
  // Least element of each class is its representative.
  for (int x = b.n - 1; x >= 0; --x) t.phis[g.block[x] - 1] = inverse_perm(b.circ[x]);
  return t;
}

}  // namespace birack
