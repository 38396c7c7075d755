#pragma once

#include <optional>
#include <string>

#include "birack/base.hpp"

namespace birack {

// On-disk description of a structure.  bullet, grading and phi are optional:
// a missing bullet is derived via x • y = (x o y) \o x, a missing grading
// defaults to the single block, phi is required only by twist commands.
struct InputDocument {
  int n = 0;
  Table circ;
  std::optional<Table> bullet;
  std::optional<std::vector<int>> grading;  // block labels, 1..p
  std::optional<std::vector<Perm>> phi;
};

// Strict JSON: exactly the fields above, unknown fields rejected, element
// indices 0-based.  Throws bad_document with the position of the fault.
InputDocument parse_document(const std::string& text);
InputDocument load_document(const std::string& path);

std::string write_document(const InputDocument& doc, int indent = 2);

}  // namespace birack
