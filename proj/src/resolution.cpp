#include "cmreg/resolution.hpp"

#include <algorithm>

#include "cmreg/groebner.hpp"

namespace cmreg {

namespace {

bool is_unit_entry(const Polynomial& f) { return !f.is_zero() && f.degree() == 0; }

GradedMap drop_row_col(const GradedMap& m, int dr, int dc) {
  GradedMap out;
  out.ctx = m.ctx;
  for (int r = 0; r < m.rows(); ++r)
    if (r != dr) out.target_twists.push_back(m.target_twists[r]);
  for (int c = 0; c < m.cols(); ++c)
    if (c != dc) out.source_twists.push_back(m.source_twists[c]);
  out.entries.reserve(static_cast<size_t>(out.rows()) * static_cast<size_t>(out.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    if (r == dr) continue;
    for (int c = 0; c < m.cols(); ++c) {
      if (c == dc) continue;
      out.entries.push_back(m.at(r, c));
    }
  }
  return out;
}

// Split off the trivial subcomplex S(-e) = S(-e) through the unit entry at
// (r, c) of maps[k]. The remaining differentials: maps[k] is updated by the
// usual elimination step, the adjacent maps just lose the matching row or
// column (composing to zero keeps them consistent, no correction needed).
void cancel_pivot(Resolution& res, int k, int r, int c) {
  GradedMap& m = res.maps[static_cast<size_t>(k)];
  const Zp& field = res.ctx->field;
  uint32_t uinv = field.inv(m.at(r, c).lead_term().coeff);
  for (int r2 = 0; r2 < m.rows(); ++r2) {
    if (r2 == r || m.at(r2, c).is_zero()) continue;
    for (int c2 = 0; c2 < m.cols(); ++c2) {
      if (c2 == c || m.at(r, c2).is_zero()) continue;
      m.at(r2, c2) = m.at(r2, c2).sub(m.at(r2, c).mul(m.at(r, c2)).scale(uinv));
    }
  }
  res.maps[static_cast<size_t>(k)] = drop_row_col(m, r, c);
  if (static_cast<size_t>(k) + 1 < res.maps.size())
    res.maps[static_cast<size_t>(k) + 1] = drop_row_col(res.maps[static_cast<size_t>(k) + 1], c, -1);
  if (k > 0)
    res.maps[static_cast<size_t>(k) - 1] = drop_row_col(res.maps[static_cast<size_t>(k) - 1], -1, r);
  else
    res.augmentation.erase(res.augmentation.begin() + r);
  res.twists[static_cast<size_t>(k)].erase(res.twists[static_cast<size_t>(k)].begin() + r);
  res.twists[static_cast<size_t>(k) + 1].erase(res.twists[static_cast<size_t>(k) + 1].begin() + c);
}

int count_nonzero_row(const GradedMap& m, int r) {
  int n = 0;
  for (int c = 0; c < m.cols(); ++c)
    if (!m.at(r, c).is_zero()) ++n;
  return n;
}

int count_nonzero_col(const GradedMap& m, int c) {
  int n = 0;
  for (int r = 0; r < m.rows(); ++r)
    if (!m.at(r, c).is_zero()) ++n;
  return n;
}

void minimalize(Resolution& res) {
  for (;;) {
    int pk = -1, pr = -1, pc = -1;
    // earliest map first; within it prefer the sparsest pivot cross
    for (size_t k = 0; k < res.maps.size() && pk < 0; ++k) {
      const GradedMap& m = res.maps[k];
      int best_weight = -1;
      for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
          if (!is_unit_entry(m.at(r, c))) continue;
          int w = count_nonzero_row(m, r) + count_nonzero_col(m, c);
          if (best_weight < 0 || w < best_weight) {
            best_weight = w;
            pk = static_cast<int>(k);
            pr = r;
            pc = c;
          }
        }
      }
    }
    if (pk < 0) return;
    cancel_pivot(res, pk, pr, pc);
  }
}

void check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

// Always-on structural audit. Failures here mean a library bug, not bad
// input, so everything throws InternalError.
void verify_resolution(const Resolution& res, const Ideal& ideal) {
  const int n = res.ctx->num_vars;
  check(!res.twists.empty(), "resolution has no levels");
  check(res.maps.size() + 1 == res.twists.size(), "resolution level/map count mismatch");
  check(res.augmentation.size() == res.twists[0].size(), "augmentation rank mismatch");
  check(res.length() <= n, "resolution longer than the number of variables");

  for (size_t i = 0; i + 1 < res.twists.size(); ++i)
    check(!res.twists[i].empty(), "interior zero module in resolution");

  for (size_t r = 0; r < res.augmentation.size(); ++r) {
    const Polynomial& g = res.augmentation[r];
    check(!g.is_zero(), "zero augmentation entry");
    DegreeCheck dc = is_homogeneous(g);
    check(dc.homogeneous && dc.degree == res.twists[0][r], "augmentation degree mismatch");
  }

  for (size_t k = 0; k < res.maps.size(); ++k) {
    const GradedMap& m = res.maps[k];
    check(m.target_twists == res.twists[k] && m.source_twists == res.twists[k + 1],
          "map twists disagree with resolution twists");
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        const Polynomial& e = m.at(r, c);
        if (e.is_zero()) continue;
        DegreeCheck dc = is_homogeneous(e);
        check(dc.homogeneous && dc.degree == res.twists[k + 1][c] - res.twists[k][r],
              "map entry degree mismatch");
        check(e.degree() != 0, "non-minimal resolution survived minimalization");
      }
    }
  }

  // the complex squares to zero
  if (!res.maps.empty()) {
    const GradedMap& m0 = res.maps[0];
    for (int c = 0; c < m0.cols(); ++c) {
      Polynomial acc = Polynomial::zero(res.ctx);
      for (int r = 0; r < m0.rows(); ++r) {
        if (m0.at(r, c).is_zero()) continue;
        acc = acc.add(res.augmentation[static_cast<size_t>(r)].mul(m0.at(r, c)));
      }
      check(acc.is_zero(), "augmentation does not annihilate the first syzygies");
    }
  }
  for (size_t k = 0; k + 1 < res.maps.size(); ++k) {
    const GradedMap& a = res.maps[k];
    const GradedMap& b = res.maps[k + 1];
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < b.cols(); ++c) {
        Polynomial acc = Polynomial::zero(res.ctx);
        for (int t = 0; t < a.cols(); ++t) {
          if (a.at(r, t).is_zero() || b.at(t, c).is_zero()) continue;
          acc = acc.add(a.at(r, t).mul(b.at(t, c)));
        }
        check(acc.is_zero(), "differential does not square to zero");
      }
    }
  }

  // Euler characteristic reproduces the Hilbert function of the ideal
  int reg = kRegMinusInfinity;
  for (size_t i = 0; i < res.twists.size(); ++i)
    for (int e : res.twists[i]) reg = std::max(reg, e - static_cast<int>(i));
  int top = (reg == kRegMinusInfinity ? 0 : reg) + n + 2;
  for (int d = 0; d <= top; ++d) {
    int64_t euler = 0;
    int64_t sign = 1;
    for (size_t i = 0; i < res.twists.size(); ++i, sign = -sign)
      for (int e : res.twists[i]) euler += sign * monomial_count(n, d - e);
    check(euler == hilbert_function(ideal, d), "resolution contradicts the Hilbert function");
  }
}

}  // namespace

Resolution minimal_free_resolution(const Ideal& ideal) {
  const RingPtr& ctx = ideal.context();
  Resolution res;
  res.ctx = ctx;
  if (ideal.is_zero()) {
    res.twists.push_back({});
    verify_resolution(res, ideal);
    return res;
  }

  std::vector<GroebnerBasis> levels{ideal.groebner_basis()};
  for (;;) {
    if (static_cast<int>(levels.size()) > ctx->num_vars + 3)
      throw InternalError("syzygy tower failed to terminate");
    std::vector<FreeModuleElement> syz = syzygy_basis(levels.back());
    if (syz.empty()) break;
    FreeModulePtr mod = syz.front().module();
    levels.push_back(GroebnerBasis{std::move(mod), std::move(syz)});
  }

  for (const GroebnerBasis& level : levels) {
    std::vector<int> tw;
    for (const FreeModuleElement& e : level.elements) {
      std::optional<int> d = e.homogeneous_degree();
      if (!d) throw InternalError("inhomogeneous element in a resolution level");
      tw.push_back(*d);
    }
    res.twists.push_back(std::move(tw));
  }
  for (const FreeModuleElement& e : levels[0].elements) res.augmentation.push_back(e.to_polynomial());
  for (size_t k = 0; k + 1 < levels.size(); ++k) {
    GradedMap m;
    m.ctx = ctx;
    m.target_twists = res.twists[k];
    m.source_twists = res.twists[k + 1];
    m.entries.reserve(res.twists[k].size() * res.twists[k + 1].size());
    std::vector<std::vector<Polynomial>> cols;
    for (const FreeModuleElement& e : levels[k + 1].elements) cols.push_back(e.components());
    for (size_t r = 0; r < res.twists[k].size(); ++r)
      for (size_t c = 0; c < res.twists[k + 1].size(); ++c) m.entries.push_back(cols[c][r]);
    res.maps.push_back(std::move(m));
  }

  minimalize(res);
  while (res.twists.size() > 1 && res.twists.back().empty()) {
    res.twists.pop_back();
    res.maps.pop_back();
  }
  for (size_t k = 0; k < res.maps.size(); ++k) {
    res.maps[k].target_twists = res.twists[k];
    res.maps[k].source_twists = res.twists[k + 1];
  }
  verify_resolution(res, ideal);
  return res;
}

BettiTable betti_table(const Resolution& res) {
  for (const GradedMap& m : res.maps)
    for (const Polynomial& e : m.entries)
      if (is_unit_entry(e)) throw Error("betti table requires a minimal resolution");
  BettiTable b;
  for (size_t i = 0; i < res.twists.size(); ++i)
    for (int e : res.twists[i]) ++b.ranks[{static_cast<int>(i), e}];
  return b;
}

int regularity(const BettiTable& betti) {
  int reg = kRegMinusInfinity;
  for (const auto& [ij, rank] : betti.ranks) {
    if (rank > 0) reg = std::max(reg, ij.second - ij.first);
  }
  return reg;
}

int regularity_betti(const Ideal& ideal) {
  return regularity(betti_table(minimal_free_resolution(ideal)));
}

}  // namespace cmreg
