#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cmreg/ideal.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

// Twisted cohomology of the ideal sheaf on P^n, n = num_vars - 1, computed
// without ever leaving exact arithmetic:
//   h^0(sheaf(d))            = dim of the degree-d piece of the saturation,
//   h^i(sheaf(d)), 1 <= i <= n, by graded duality from a minimal resolution
//     of the ideal: h^i(sheaf(d)) = dim Ext^{n-i}(I, S(-n-1)) in degree -d,
//     and the Ext groups are cohomology of the twist-(n+1) dual complex.
// The resolution, its dual, and every graded rank are computed once and
// cached, so one instance amortizes over many (i, d) queries.
class SheafCohomology {
 public:
  explicit SheafCohomology(Ideal ideal);

  // h^i(sheaf(d)); i outside [0, n] is a caller error
  int64_t dim(int i, int d);
  // dim_k Ext^k(I, S(-num_vars))_t; zero outside 0 <= k <= length
  int64_t ext_dim(int k, int t);

  const Ideal& ideal() const { return ideal_; }
  int space_dim() const { return n_; }

 private:
  int64_t rank_at(int k, int t);  // rank of the degree-t piece of dual_[k]
  const Ideal& saturation();

  Ideal ideal_;
  int n_;
  Resolution res_;
  std::vector<std::vector<int>> dual_twists_;  // of Hom(F_k, S(-num_vars))
  std::vector<GradedMap> dual_;                // dual_[k] : D_{k-1} -> D_k, k >= 1
  std::optional<Ideal> sat_;
  std::map<std::pair<int, int>, int64_t> rank_cache_;
};

// The matrix of the degree-t graded piece of a homogeneous map, over the
// monomial bases of source and target. Exposed for the audit tests.
ZpMatrix graded_piece(const GradedMap& m, int t);

int64_t sheaf_cohomology_dim(const Ideal& ideal, int i, int d);

// Least m such that h^i(sheaf(m - i)) = 0 for every i >= 1. Well-defined
// and >= 0 for any nonzero ideal; the zero ideal is rejected.
int sheaf_regularity(const Ideal& ideal);

// The three faces of m-regularity checked independently against one ideal:
//   vanishing_at_m:   degree-m piece of the ideal equals its saturation's,
//                     and h^i(sheaf(m - i)) = 0 for 1 <= i <= n;
//   vanishing_from_m: the same two conditions over a degree window m..m+w
//                     (h^i checked for all d in [m - i, m + w]);
//   betti_bound:      max j - i over nonzero beta_{i,j} is at most m.
struct RegularityCharacterizations {
  bool vanishing_at_m;
  bool vanishing_from_m;
  bool betti_bound;
};

// window < 0 selects the default width num_vars + 2
RegularityCharacterizations check_regularity_characterizations(const Ideal& ideal, int m,
                                                               int window = -1);

// h[i][d - d_lo] = h^i(sheaf(d)) for 0 <= i <= n, d_lo <= d <= d_hi
struct CohomologyTable {
  int n;
  int d_lo;
  int d_hi;
  std::vector<std::vector<int64_t>> h;
};

CohomologyTable cohomology_table(const Ideal& ideal, int d_lo, int d_hi);

}  // namespace cmreg
