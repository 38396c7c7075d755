#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace birack {

// Elements are 0-based indices into the carrier {0,...,n-1}.
using Elem = int;
// A permutation given by its image vector.
using Perm = std::vector<int>;
// Square operation table, entries[x][y] = x op y.
using Table = std::vector<std::vector<int>>;

enum class errc {
  row_not_bijective,
  column_not_bijective,
  not_nondegenerate,
  not_right_cyclic,
  not_involutive,
  not_distributive,
  not_a_birack,
  degenerate,
  shape_mismatch,
  bad_grading,
  hypothesis_violated,
  budget_exceeded,
  size_unsupported,
  rank_mismatch,
  overflow,
  bad_document,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what, long detail = -1)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  errc code() const noexcept { return code_; }
  // Row, column or degree index when the error concerns one.
  long detail() const noexcept { return detail_; }

private:
  errc code_;
  long detail_;
};

bool is_permutation(const Perm& f);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& f);
// (f after g): x -> f(g(x)).
Perm compose(const Perm& f, const Perm& g);

// n x n with entries in 0..n-1, n >= 1.
bool table_shaped(const Table& t);
// Size of a shaped table; throws shape_mismatch otherwise.
int table_size(const Table& t);

// Partition of {0..n-1} into blocks labelled 1..p, labels introduced in order
// of first occurrence.  The degree vector of x is the unit vector with a 1 at
// position block[x].
struct Grading {
  std::vector<int> block;
  int p = 0;

  int n() const { return static_cast<int>(block.size()); }

  static Grading trivial(int n);
  // Validates the labelling; inputs using other label schemes are rejected,
  // not renumbered.
  static Grading from_blocks(std::vector<int> blocks);

  friend bool operator==(const Grading&, const Grading&) = default;
};

}  // namespace birack
