#include "birack/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace birack {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw error(errc::bad_document, where + ": " + what);
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> get_int_vector(const json& j, const std::string& where, int len, int lo,
                                int hi) {
  if (!j.is_array() || static_cast<int>(j.size()) != len)
    bad(where, "expected an array of length " + std::to_string(len));
  std::vector<int> out;
  out.reserve(len);
  for (size_t i = 0; i < j.size(); ++i) {
    const int v = get_int(j[i], where + "[" + std::to_string(i) + "]");
    if (v < lo || v > hi)
      bad(where + "[" + std::to_string(i) + "]",
          "value " + std::to_string(v) + " out of range " + std::to_string(lo) + ".." +
              std::to_string(hi));
    out.push_back(v);
  }
  return out;
}

Table get_table(const json& j, const std::string& where, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    bad(where, "expected " + std::to_string(n) + " rows");
  Table t;
  t.reserve(n);
  for (int x = 0; x < n; ++x)
    t.push_back(get_int_vector(j[x], where + "[" + std::to_string(x) + "]", n, 0, n - 1));
  return t;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::bad_document,
                std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) bad("document", "expected a JSON object");

  static const char* known[] = {"n", "circ", "bullet", "grading", "phi"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) bad(key, "unknown field");
  }
  if (!doc.contains("n")) bad("n", "missing required field");
  if (!doc.contains("circ")) bad("circ", "missing required field");

  InputDocument out;
  out.n = get_int(doc["n"], "n");
  if (out.n < 1) bad("n", "carrier size must be at least 1");
  out.circ = get_table(doc["circ"], "circ", out.n);
  if (doc.contains("bullet")) out.bullet = get_table(doc["bullet"], "bullet", out.n);
  if (doc.contains("grading")) {
    std::vector<int> blocks = get_int_vector(doc["grading"], "grading", out.n, 1, out.n);
    try {
      Grading::from_blocks(blocks);
    } catch (const error& e) {
      bad("grading", e.what());
    }
    out.grading = std::move(blocks);
  }
  if (doc.contains("phi")) {
    const json& phis = doc["phi"];
    if (!phis.is_array()) bad("phi", "expected an array of permutations");
    const int p = out.grading ? Grading::from_blocks(*out.grading).p : 1;
    if (static_cast<int>(phis.size()) != p)
      bad("phi", "expected one permutation per block (" + std::to_string(p) + ")");
    std::vector<Perm> fs;
    for (size_t s = 0; s < phis.size(); ++s) {
      const std::string where = "phi[" + std::to_string(s) + "]";
      Perm f = get_int_vector(phis[s], where, out.n, 0, out.n - 1);
      if (!is_permutation(f)) bad(where, "not a permutation");
      fs.push_back(std::move(f));
    }
    out.phi = std::move(fs);
  }
  return out;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_document, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string write_document(const InputDocument& doc, int indent) {
  json j;
  j["n"] = doc.n;
  j["circ"] = doc.circ;
  if (doc.bullet) j["bullet"] = *doc.bullet;
  if (doc.grading) j["grading"] = *doc.grading;
  if (doc.phi) j["phi"] = *doc.phi;
  return j.dump(indent);
}

}  // namespace birack
