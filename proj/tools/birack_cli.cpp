// Command-line front end: loads JSON structure documents, runs the library
// checks and prints machine-readable reports to stdout with a human summary
// on stderr.  Exit codes: 0 all checks pass, 1 a mathematical property
// failed, 2 malformed input.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "birack/algebra.hpp"
#include "birack/census.hpp"
#include "birack/io.hpp"
#include "birack/solution.hpp"

using nlohmann::json;
using namespace birack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitMalformed = 2;

bool malformed_input(errc c) {
  switch (c) {
    case errc::bad_document:
    case errc::row_not_bijective:
    case errc::column_not_bijective:
    case errc::shape_mismatch:
    case errc::bad_grading:
    case errc::size_unsupported:
      return true;
    default:
      return false;
  }
}

struct Loaded {
  InputDocument doc;
  LeftQuasigroup lq;
  Grading grading;
  std::optional<Birack> birack;  // absent when bullet is missing and underivable
  bool bullet_derived = false;
  std::optional<TwistSystem> twist;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = load_document(path);
  l.lq = validate_left_quasigroup(l.doc.circ);
  l.grading = l.doc.grading ? Grading::from_blocks(*l.doc.grading) : Grading::trivial(l.doc.n);
  if (l.doc.bullet) {
    l.birack = birack_from_tables(l.doc.circ, *l.doc.bullet);
  } else if (is_right_cyclic(l.lq) && is_nondegenerate(l.lq)) {
    l.birack = derive_birack(l.lq);
    l.bullet_derived = true;
  }
  if (l.doc.phi) l.twist = TwistSystem{*l.doc.phi, l.grading};
  return l;
}

TwistSystem require_twist(const Loaded& l) {
  if (!l.twist)
    throw error(errc::bad_document, "document has no phi field");
  return *l.twist;
}

Birack require_birack(const Loaded& l) {
  if (!l.birack)
    throw error(errc::not_right_cyclic,
                "bullet is missing and cannot be derived: the left quasigroup is not "
                "right cyclic and non-degenerate");
  return *l.birack;
}

std::string relation_text(const TensorVector& v, int n) {
  std::string s;
  for (size_t i = 0; i < v.terms.size(); ++i) {
    const auto& [k, c] = v.terms[i];
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + " ";
    s += "x" + std::to_string(k / n) + "*x" + std::to_string(k % n);
  }
  return s;
}

json relations_json(const QuadraticRelationSet& r) {
  json out = json::array();
  for (const TensorVector& v : r.relations) {
    json rel;
    rel["terms"] = json::array();
    for (const auto& [k, c] : v.terms)
      rel["terms"].push_back({{"x", k / r.n}, {"y", k % r.n}, {"c", c}});
    rel["text"] = relation_text(v, r.n);
    out.push_back(std::move(rel));
  }
  return out;
}

json document_json(const InputDocument& doc) { return json::parse(write_document(doc, -1)); }

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int cmd_check(const std::string& path) {
  const Loaded l = load(path);
  json checks;
  json report;
  report["n"] = l.doc.n;

  checks["left_quasigroup"] = true;  // validated during load
  checks["nondegenerate"] = is_nondegenerate(l.lq);
  checks["right_cyclic"] = is_right_cyclic(l.lq);
  checks["distributive"] = is_distributive(l.lq);
  checks["two_reductive"] = is_two_reductive(l.lq);
  report["l_classes"] = l_equivalence_partition(l.lq).block;
  report["bullet_derived"] = l.bullet_derived;

  bool ok = checks["nondegenerate"].get<bool>() && checks["right_cyclic"].get<bool>();
  if (l.birack) {
    const Birack& b = *l.birack;
    const BirackCheck bc = verify_birack(b);
    checks["right_quasigroup"] = true;  // validated during load
    checks["birack"] = bc.ok;
    if (!bc.ok) report["birack_failure"] = bc.describe();
    checks["involutive"] = is_involutive(b);
    checks["lri"] = satisfies_lri(b);
    if (l.bullet_derived) report["bullet"] = b.bullet;

    const Solution s = [&] {
      std::vector<std::pair<int, int>> map(static_cast<size_t>(b.n) * b.n);
      for (int x = 0; x < b.n; ++x)
        for (int y = 0; y < b.n; ++y)
          map[static_cast<size_t>(x) * b.n + y] = {b.circ[x][y], b.bullet[x][y]};
      return make_solution(b.n, std::move(map));
    }();
    checks["square_free"] = is_square_free(s);
    checks["braided"] = is_braided(s);
    const YBConditions yb = check_l1_r1_lr3(s);
    checks["l1"] = yb.l1;
    checks["r1"] = yb.r1;
    checks["lr3"] = yb.lr3;
    if (is_nondegenerate(s))
      report["permutation_group_order"] = permutation_group_order(s);
    else
      report["permutation_group_order"] = nullptr;
    ok = ok && bc.ok && checks["involutive"].get<bool>() && checks["braided"].get<bool>() &&
         yb.all();
  } else {
    for (const char* k : {"right_quasigroup", "birack", "involutive", "lri", "square_free",
                          "braided", "l1", "r1", "lr3"})
      checks[k] = nullptr;
    report["permutation_group_order"] = nullptr;
    ok = false;
  }
  report["checks"] = checks;
  report["ok"] = ok;
  emit(report);

  for (const auto& [key, value] : checks.items())
    std::cerr << key << ": " << (value.is_null() ? "n/a" : value.get<bool>() ? "yes" : "no")
              << "\n";
  std::cerr << (ok ? "all core checks passed" : "core checks FAILED") << "\n";
  return ok ? kExitOk : kExitPropertyFailed;
}

int cmd_isotope(const std::string& path, const std::string& out_path) {
  const Loaded l = load(path);
  if (!l.doc.grading || !l.doc.phi)
    throw error(errc::bad_document, "isotope requires grading and phi fields");
  const Birack b = require_birack(l);
  const TwistSystem t = require_twist(l);
  const Birack iso = isotope_birack(b, t);

  InputDocument out;
  out.n = iso.n;
  out.circ = iso.circ;
  out.bullet = iso.bullet;
  out.grading = l.doc.grading;

  json report;
  report["n"] = iso.n;
  report["isotope"] = document_json(out);
  json post;
  post["birack"] = static_cast<bool>(verify_birack(iso));
  post["involutive"] = is_involutive(iso);
  post["graded"] = is_graded(iso, t.grading);
  post["lri"] = satisfies_lri(iso);
  report["post_checks"] = post;
  const bool ok = post["birack"].get<bool>() && post["involutive"].get<bool>() &&
                  post["graded"].get<bool>() && post["lri"].get<bool>();
  report["ok"] = ok;
  emit(report);

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw error(errc::bad_document, "cannot write " + out_path);
    f << write_document(out) << "\n";
  }
  std::cerr << "isotope computed; post checks " << (ok ? "passed" : "FAILED") << "\n";
  return ok ? kExitOk : kExitPropertyFailed;
}

int cmd_twist(const std::string& path, bool weak) {
  const Loaded l = load(path);
  const Birack b = require_birack(l);
  const TwistSystem t = require_twist(l);
  const TwistVerdict v = validate_twist_system(b.left(), t, !weak);
  if (!v.ok()) {
    std::string msg = "twist system validation failed";
    for (const auto& f : v.failures()) msg += "; " + f;
    throw error(errc::hypothesis_violated, msg);
  }
  const QuadraticRelationSet original = quadratic_relations(b);
  const QuadraticRelationSet twisted = twist_relations(original, t);
  json report;
  report["n"] = b.n;
  report["relations"] = relations_json(original);
  report["twisted"] = relations_json(twisted);
  report["ok"] = true;
  emit(report);
  std::cerr << original.relations.size() << " relations, twisted set printed\n";
  return kExitOk;
}

int cmd_hilbert(const std::string& path, int max_degree, std::uint64_t max_entries) {
  const Loaded l = load(path);
  const Birack b = require_birack(l);
  const QuadraticRelationSet r = quadratic_relations(b);
  HilbertOptions opts;
  opts.max_entries = max_entries;
  const HilbertTable dims = hilbert_function(r, max_degree, opts);
  json report;
  report["n"] = b.n;
  report["max_degree"] = max_degree;
  report["relations"] = relations_json(r);
  report["dims"] = dims;
  report["ok"] = true;
  emit(report);
  std::cerr << "hilbert:";
  for (auto d : dims) std::cerr << " " << d;
  std::cerr << "\n";
  return kExitOk;
}

int cmd_theorem1(const std::string& path, int max_degree, std::uint64_t max_entries) {
  const Loaded l = load(path);
  if (!l.doc.phi) throw error(errc::bad_document, "theorem1 requires a phi field");
  const Birack b = require_birack(l);
  const TwistSystem t = require_twist(l);
  const TheoremCertificate cert = verify_theorem1(b, t);

  HilbertOptions opts;
  opts.max_entries = max_entries;
  const QuadraticRelationSet original = quadratic_relations(b);

  json report;
  report["n"] = b.n;
  report["relations"] = relations_json(original);
  report["twisted_relations"] = relations_json(cert.twisted_relations);
  report["isotope_relations"] = relations_json(cert.isotope_relations);
  report["setwise_equal"] = cert.setwise_equal;
  report["spans_equal"] = cert.spans_equal;
  report["hilbert_original"] = hilbert_function(original, max_degree, opts);
  report["hilbert_isotope"] = hilbert_function(cert.isotope_relations, max_degree, opts);
  if (!cert.ok()) {
    json diff;
    diff["only_in_isotope"] = json::array();
    diff["only_in_twisted"] = json::array();
    for (const TensorVector& v : cert.isotope_relations.relations)
      if (std::find(cert.twisted_relations.relations.begin(),
                    cert.twisted_relations.relations.end(),
                    v) == cert.twisted_relations.relations.end())
        diff["only_in_isotope"].push_back(relation_text(v, b.n));
    for (const TensorVector& v : cert.twisted_relations.relations)
      if (std::find(cert.isotope_relations.relations.begin(),
                    cert.isotope_relations.relations.end(),
                    v) == cert.isotope_relations.relations.end())
        diff["only_in_twisted"].push_back(relation_text(v, b.n));
    report["diff"] = diff;
  }
  report["ok"] = cert.ok();
  emit(report);
  std::cerr << "theorem certificate: " << (cert.ok() ? "CERTIFIED" : "FAILED") << "\n";
  return cert.ok() ? kExitOk : kExitPropertyFailed;
}

int cmd_enumerate(int n, bool up_to_iso, bool distributive_only, bool with_twists, bool tables,
                  bool large) {
  std::vector<Birack> sols = enumerate_solutions(n, up_to_iso, large);
  if (distributive_only)
    std::erase_if(sols, [](const Birack& b) { return !is_distributive(b); });

  json report;
  report["n"] = n;
  report["up_to_iso"] = up_to_iso;
  report["count"] = sols.size();
  if (tables) {
    report["solutions"] = json::array();
    for (const Birack& b : sols)
      report["solutions"].push_back({{"circ", b.circ}, {"bullet", b.bullet}});
  }

  std::size_t twist_checks = 0, twist_failures = 0;
  if (with_twists) {
    for (const Birack& b : sols) {
      if (!satisfies_lri(b)) continue;
      std::vector<Grading> gradings{Grading::trivial(b.n)};
      const Grading lcls = l_equivalence_partition(b.left());
      if (lcls.p > 1 && is_graded(b, lcls)) gradings.push_back(lcls);
      for (const Grading& g : gradings)
        for (const TwistSystem& t : enumerate_twist_systems(b, g, /*strong=*/true)) {
          ++twist_checks;
          if (!verify_theorem1(b, t).ok()) ++twist_failures;
        }
    }
    report["twist_checks"] = twist_checks;
    report["twist_failures"] = twist_failures;
  }
  const bool ok = !with_twists || twist_failures == 0;
  report["ok"] = ok;
  emit(report);
  std::cerr << "count: " << sols.size();
  if (with_twists) std::cerr << ", twist checks: " << twist_checks << ", failures: " << twist_failures;
  std::cerr << "\n";
  return ok ? kExitOk : kExitPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite biracks, Yang-Baxter solutions and their twisted algebras"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  bool weak = false;
  int max_degree = 6;
  std::uint64_t max_entries = HilbertOptions{}.max_entries;
  int n = 0;
  bool up_to_iso = false, distributive_only = false, with_twists = false, tables = false,
       large = false;

  auto* check = app.add_subcommand("check", "run every structural check on a document");
  check->add_option("file", path, "JSON document")->required();

  auto* isotope = app.add_subcommand("isotope", "compute the twisted birack of a document");
  isotope->add_option("file", path, "JSON document")->required();
  isotope->add_option("-o,--output", out_path, "write the isotope document to a file");

  auto* twist = app.add_subcommand("twist", "print the twisted quadratic relation set");
  twist->add_option("file", path, "JSON document")->required();
  twist->add_flag("--weak", weak, "validate the twist system at the weak level only");

  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the document's algebra");
  hilbert->add_option("file", path, "JSON document")->required();
  hilbert->add_option("--max-degree", max_degree, "top degree (default 6)");
  hilbert->add_option("--max-entries", max_entries, "cap on shift-matrix entries");

  auto* theorem1 = app.add_subcommand("theorem1", "certify the twisted-presentation theorem");
  theorem1->add_option("file", path, "JSON document")->required();
  theorem1->add_option("--max-degree", max_degree, "top degree (default 6)");
  theorem1->add_option("--max-entries", max_entries, "cap on shift-matrix entries");

  auto* enumerate = app.add_subcommand("enumerate", "census of involutive solutions of size n");
  enumerate->add_option("n", n, "carrier size (1..5)")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso, "one representative per isomorphism class");
  enumerate->add_flag("--distributive-only", distributive_only, "keep distributive solutions");
  enumerate->add_flag("--with-twists", with_twists,
                      "certify the theorem over every strong twist system");
  enumerate->add_flag("--tables", tables, "include full tables in the report");
  enumerate->add_flag("--large", large, "allow the long-running n = 5 census");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*check) return cmd_check(path);
    if (*isotope) return cmd_isotope(path, out_path);
    if (*twist) return cmd_twist(path, weak);
    if (*hilbert) return cmd_hilbert(path, max_degree, max_entries);
    if (*theorem1) return cmd_theorem1(path, max_degree, max_entries);
    if (*enumerate)
      return cmd_enumerate(n, up_to_iso, distributive_only, with_twists, tables, large);
  } catch (const error& e) {
    json report;
    report["error"] = errc_name(e.code());
    report["message"] = e.what();
    if (e.detail() >= 0) report["detail"] = e.detail();
    report["ok"] = false;
    emit(report);
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return malformed_input(e.code()) ? kExitMalformed : kExitPropertyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
