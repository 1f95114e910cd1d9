#pragma once

#include <climits>
#include <map>
#include <utility>
#include <vector>

#include "cmreg/ideal.hpp"

namespace cmreg {

// Matrix of homogeneous polynomials between graded free modules, row-major.
// Column c of the matrix is the image of source generator c; entry (r, c) is
// homogeneous of degree source_twists[c] - target_twists[r] (or zero).
struct GradedMap {
  RingPtr ctx;
  std::vector<int> source_twists;
  std::vector<int> target_twists;
  std::vector<Polynomial> entries;

  int rows() const { return static_cast<int>(target_twists.size()); }
  int cols() const { return static_cast<int>(source_twists.size()); }
  const Polynomial& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * static_cast<size_t>(source_twists.size()) +
                   static_cast<size_t>(c)];
  }
  Polynomial& at(int r, int c) {
    return entries[static_cast<size_t>(r) * static_cast<size_t>(source_twists.size()) +
                   static_cast<size_t>(c)];
  }
};

// Graded free resolution of an ideal viewed as a module:
//   0 <- I <- F_0 <- F_1 <- ... <- F_len
// augmentation[r] is the image of generator r of F_0 in the ring, maps[k] is
// the differential F_{k+1} -> F_k, and twists[i] lists the generator degrees
// of F_i. The zero ideal resolves to a single rank-zero F_0.
struct Resolution {
  RingPtr ctx;
  std::vector<Polynomial> augmentation;
  std::vector<std::vector<int>> twists;
  std::vector<GradedMap> maps;

  int length() const { return static_cast<int>(twists.size()) - 1; }
};

// Iterated syzygies pruned to a minimal resolution (no differential has a
// unit entry). Checked invariants before returning: squares to zero, entries
// homogeneous of the twist-prescribed degrees, minimal, length at most
// num_vars, and the Euler characteristic reproduces the Hilbert function of
// the ideal through degree regularity + num_vars + 2.
Resolution minimal_free_resolution(const Ideal& ideal);

// beta[{i, j}] = number of degree-j generators of F_i. Only nonzero entries
// are stored. Requires a minimal resolution.
struct BettiTable {
  std::map<std::pair<int, int>, int64_t> ranks;
};

BettiTable betti_table(const Resolution& res);

// Regularity of the zero ideal (empty Betti table): minus infinity.
constexpr int kRegMinusInfinity = INT_MIN;

// max over nonzero beta[{i, j}] of j - i
int regularity(const BettiTable& betti);
int regularity_betti(const Ideal& ideal);

}  // namespace cmreg
