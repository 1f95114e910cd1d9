#include "cmreg/cohomology.hpp"

#include <algorithm>

namespace cmreg {

namespace {

// per-degree monomial basis with exponent-vector lookup
struct DegreeBasis {
  std::vector<Monomial> monos;
  std::map<std::vector<int>, size_t> index;
};

const DegreeBasis& degree_basis(int nvars, int degree) {
  static std::map<std::pair<int, int>, DegreeBasis> cache;
  auto [it, fresh] = cache.try_emplace({nvars, degree});
  if (fresh) {
    it->second.monos = monomials_of_degree(nvars, degree);
    for (size_t k = 0; k < it->second.monos.size(); ++k)
      it->second.index[it->second.monos[k].exponents()] = k;
  }
  return it->second;
}

}  // namespace

ZpMatrix graded_piece(const GradedMap& m, int t) {
  const int nv = m.ctx->num_vars;
  std::vector<size_t> row_offset(m.target_twists.size() + 1, 0);
  for (size_t r = 0; r < m.target_twists.size(); ++r)
    row_offset[r + 1] =
        row_offset[r] + static_cast<size_t>(std::max<int64_t>(0, monomial_count(nv, t - m.target_twists[r])));
  std::vector<size_t> col_offset(m.source_twists.size() + 1, 0);
  for (size_t c = 0; c < m.source_twists.size(); ++c)
    col_offset[c + 1] =
        col_offset[c] + static_cast<size_t>(std::max<int64_t>(0, monomial_count(nv, t - m.source_twists[c])));

  ZpMatrix out(m.ctx->field, row_offset.back(), col_offset.back());
  for (size_t c = 0; c < m.source_twists.size(); ++c) {
    int sdeg = t - m.source_twists[c];
    if (sdeg < 0) continue;
    const DegreeBasis& src = degree_basis(nv, sdeg);
    for (size_t r = 0; r < m.target_twists.size(); ++r) {
      const Polynomial& e = m.at(static_cast<int>(r), static_cast<int>(c));
      if (e.is_zero()) continue;
      int tdeg = t - m.target_twists[r];
      if (tdeg < 0) continue;
      const DegreeBasis& tgt = degree_basis(nv, tdeg);
      for (size_t k = 0; k < src.monos.size(); ++k) {
        for (const Term& term : e.terms()) {
          Monomial image = term.mono.mul(src.monos[k]);
          size_t row = row_offset[r] + tgt.index.at(image.exponents());
          size_t col = col_offset[c] + k;
          out.at(row, col) = m.ctx->field.add(out.at(row, col), term.coeff);
        }
      }
    }
  }
  return out;
}

SheafCohomology::SheafCohomology(Ideal ideal)
    : ideal_(std::move(ideal)),
      n_(ideal_.context()->num_vars - 1),
      res_(minimal_free_resolution(ideal_)) {
  const int nv = ideal_.context()->num_vars;
  for (const std::vector<int>& level : res_.twists) {
    std::vector<int> dual;
    for (int e : level) dual.push_back(nv - e);
    dual_twists_.push_back(std::move(dual));
  }
  // dual_[k] : D_{k-1} -> D_k is the transpose of maps[k-1] : F_k -> F_{k-1}
  dual_.emplace_back();  // slot 0 unused; Ext^0 has no incoming map
  for (size_t k = 1; k <= res_.maps.size(); ++k) {
    const GradedMap& orig = res_.maps[k - 1];
    GradedMap d;
    d.ctx = res_.ctx;
    d.source_twists = dual_twists_[k - 1];
    d.target_twists = dual_twists_[k];
    d.entries.reserve(d.source_twists.size() * d.target_twists.size());
    for (int r = 0; r < static_cast<int>(d.target_twists.size()); ++r)
      for (int c = 0; c < static_cast<int>(d.source_twists.size()); ++c)
        d.entries.push_back(orig.at(c, r));
    dual_.push_back(std::move(d));
  }
}

const Ideal& SheafCohomology::saturation() {
  if (!sat_) sat_ = saturate(ideal_);
  return *sat_;
}

int64_t SheafCohomology::rank_at(int k, int t) {
  if (k < 1 || static_cast<size_t>(k) >= dual_.size()) return 0;
  auto [it, fresh] = rank_cache_.try_emplace({k, t}, 0);
  if (fresh) {
    const GradedMap& m = dual_[static_cast<size_t>(k)];
    it->second = static_cast<int64_t>(graded_piece(m, t).rank());
  }
  return it->second;
}

int64_t SheafCohomology::ext_dim(int k, int t) {
  if (k < 0 || static_cast<size_t>(k) >= dual_twists_.size()) return 0;
  int64_t dim = 0;
  for (int e : dual_twists_[static_cast<size_t>(k)]) dim += monomial_count(n_ + 1, t - e);
  return dim - rank_at(k + 1, t) - rank_at(k, t);
}

int64_t SheafCohomology::dim(int i, int d) {
  if (i < 0 || i > n_) throw Error("cohomology index out of range");
  if (i == 0) return hilbert_function(saturation(), d);
  return ext_dim(n_ - i, -d);
}

int64_t sheaf_cohomology_dim(const Ideal& ideal, int i, int d) {
  SheafCohomology engine(ideal);
  return engine.dim(i, d);
}

namespace {

bool twist_row_vanishes(SheafCohomology& engine, int m) {
  for (int i = 1; i <= engine.space_dim(); ++i)
    if (engine.dim(i, m - i) != 0) return false;
  return true;
}

}  // namespace

int sheaf_regularity(const Ideal& ideal) {
  if (ideal.is_zero()) throw Error("the zero sheaf has no regularity");
  if (ideal.context()->num_vars < 2) throw Error("regularity needs a projective space, not a point");
  if (ideal.is_unit()) return 0;
  SheafCohomology engine(ideal);
  int m = regularity_betti(saturate(ideal));
  if (!twist_row_vanishes(engine, m))
    throw InternalError("saturated regularity is not a regular twist");
  while (twist_row_vanishes(engine, m - 1)) {
    --m;
    if (m < -1) throw InternalError("regularity scan passed the theoretical floor");
  }
  return m;
}

RegularityCharacterizations check_regularity_characterizations(const Ideal& ideal, int m,
                                                               int window) {
  const int nv = ideal.context()->num_vars;
  if (window < 0) window = nv + 2;
  SheafCohomology engine(ideal);
  const int n = engine.space_dim();

  auto piece_matches_saturation = [&](int d) {
    return hilbert_function(ideal, d) == engine.dim(0, d);
  };

  RegularityCharacterizations out{};
  out.vanishing_at_m = piece_matches_saturation(m) && twist_row_vanishes(engine, m);

  out.vanishing_from_m = true;
  for (int d = m; d <= m + window && out.vanishing_from_m; ++d)
    if (!piece_matches_saturation(d)) out.vanishing_from_m = false;
  for (int i = 1; i <= n && out.vanishing_from_m; ++i)
    for (int d = m - i; d <= m + window && out.vanishing_from_m; ++d)
      if (engine.dim(i, d) != 0) out.vanishing_from_m = false;

  // kRegMinusInfinity compares below every m, as it should
  out.betti_bound = regularity_betti(ideal) <= m;
  return out;
}

CohomologyTable cohomology_table(const Ideal& ideal, int d_lo, int d_hi) {
  if (d_hi < d_lo) throw Error("empty twist range");
  SheafCohomology engine(ideal);
  CohomologyTable t;
  t.n = engine.space_dim();
  t.d_lo = d_lo;
  t.d_hi = d_hi;
  t.h.assign(static_cast<size_t>(t.n) + 1, {});
  for (int i = 0; i <= t.n; ++i)
    for (int d = d_lo; d <= d_hi; ++d) t.h[static_cast<size_t>(i)].push_back(engine.dim(i, d));
  return t;
}

}  // namespace cmreg
