#include "cmreg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cmreg/arrangements.hpp"
#include "cmreg/cohomology.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

namespace {

// splitmix64 step; decorrelates (seed, draw) pairs into per-trial streams
uint64_t mix(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t draw_below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

using Quantities = std::vector<std::pair<std::string, std::string>>;

void put(Quantities& q, const std::string& key, int64_t value) {
  q.emplace_back(key, std::to_string(value));
}

Polynomial mono_poly(const RingPtr& ctx, std::vector<int> exps) {
  return Polynomial::from_terms(ctx, {Term{1, Monomial(std::move(exps))}});
}

// ---- replay documents -----------------------------------------------------

std::string ring_line(const RingPtr& ctx) {
  std::ostringstream out;
  out << "ring " << ctx->num_vars << " " << ctx->field.p() << "\n";
  return out.str();
}

void append_ideal_block(std::string& doc, const std::string& name, const Ideal& ideal) {
  doc += "ideal " + name + "\n";
  if (ideal.generators().empty()) doc += "0\n";
  for (const Polynomial& f : ideal.generators()) doc += format_polynomial(f) + "\n";
  doc += "end\n";
}

void append_arrangement_block(std::string& doc, const std::string& name,
                              const std::vector<LinearSubspace>& subs) {
  doc += "arrangement " + name + "\n";
  for (const LinearSubspace& s : subs) {
    doc += "subspace ";
    for (size_t i = 0; i < s.forms().size(); ++i) {
      if (i) doc += "; ";
      doc += format_polynomial(s.forms()[i]);
    }
    doc += "\n";
  }
  doc += "end\n";
}

std::string ideal_document(const Ideal& ideal, const std::string& name) {
  std::string doc = ring_line(ideal.context());
  append_ideal_block(doc, name, ideal);
  return doc;
}

// ---- cross-checks between the two regularity routes ------------------------

// Characterization (a) of m-regularity, evaluated directly on a cohomology
// engine: the degree-m piece of the ideal matches its saturation and
// h^i(sheaf(m-i)) = 0 for every i >= 1.
bool vanishing_at(SheafCohomology& sh, const Ideal& ideal, int m) {
  if (hilbert_function(ideal, m) != sh.dim(0, m)) return false;
  for (int i = 1; i <= sh.space_dim(); ++i)
    if (sh.dim(i, m - i) != 0) return false;
  return true;
}

// The resolution route gave `reg`; the cohomology route must put the least
// regular twist at exactly the same place.
bool cohomology_pins_regularity(const Ideal& ideal, int reg) {
  SheafCohomology sh(ideal);
  return vanishing_at(sh, ideal, reg) && !vanishing_at(sh, ideal, reg - 1);
}

// ---- random instances ------------------------------------------------------

std::vector<uint32_t> draw_point(const RingPtr& ctx, std::mt19937_64& rng) {
  const uint32_t p = ctx->field.p();
  std::vector<uint32_t> pt(static_cast<size_t>(ctx->num_vars));
  for (;;) {
    bool zero = true;
    for (uint32_t& c : pt) {
      c = static_cast<uint32_t>(draw_below(rng, p));
      zero = zero && c == 0;
    }
    if (!zero) return pt;
  }
}

bool same_projective_point(const RingPtr& ctx, const std::vector<uint32_t>& a,
                           const std::vector<uint32_t>& b) {
  ZpMatrix m(ctx->field, 2, a.size());
  for (size_t c = 0; c < a.size(); ++c) {
    m.at(0, c) = ctx->field.from_int(a[c]);
    m.at(1, c) = ctx->field.from_int(b[c]);
  }
  return m.rank() < 2;
}

std::vector<std::vector<uint32_t>> draw_points(const RingPtr& ctx, int k, std::mt19937_64& rng) {
  std::vector<std::vector<uint32_t>> pts;
  while (static_cast<int>(pts.size()) < k) {
    std::vector<uint32_t> pt = draw_point(ctx, rng);
    bool dup = false;
    for (const auto& q : pts) dup = dup || same_projective_point(ctx, pt, q);
    if (!dup) pts.push_back(std::move(pt));
  }
  return pts;
}

Polynomial random_dense_form(const RingPtr& ctx, int degree, std::mt19937_64& rng) {
  const uint32_t p = ctx->field.p();
  for (;;) {
    std::vector<Term> terms;
    for (const Monomial& m : monomials_of_degree(ctx->num_vars, degree)) {
      uint32_t c = static_cast<uint32_t>(draw_below(rng, p));
      if (c != 0) terms.push_back(Term{c, m});
    }
    Polynomial f = Polynomial::from_terms(ctx, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

Ideal draw_monomial_ideal(const RingPtr& ctx, std::mt19937_64& rng, int gen_cap,
                          std::string& tag) {
  int g = 1 + static_cast<int>(draw_below(rng, static_cast<uint64_t>(gen_cap)));
  std::vector<Polynomial> gens;
  for (int i = 0; i < g; ++i) {
    int deg = 1 + static_cast<int>(draw_below(rng, 3));
    std::vector<int> e(static_cast<size_t>(ctx->num_vars), 0);
    for (int t = 0; t < deg; ++t) e[draw_below(rng, static_cast<uint64_t>(ctx->num_vars))]++;
    gens.push_back(mono_poly(ctx, std::move(e)));
  }
  tag = "monomial(" + std::to_string(g) + ")";
  return Ideal(ctx, std::move(gens));
}

Ideal draw_structured_ideal(const RingPtr& ctx, std::mt19937_64& rng, std::string& tag) {
  if (draw_below(rng, 2) == 0) {
    int k = 1 + static_cast<int>(draw_below(rng, 3));
    tag = "points(" + std::to_string(k) + ")";
    return points_ideal(ctx, draw_points(ctx, k, rng));
  }
  // complete intersection; a draw that misses the expected codimension is
  // discarded, and after a few misses the trial falls back to a principal power
  for (int attempt = 0; attempt < 5; ++attempt) {
    int c = 1 + static_cast<int>(draw_below(rng, 2));
    std::vector<Polynomial> forms;
    for (int i = 0; i < c; ++i)
      forms.push_back(random_dense_form(ctx, 1 + static_cast<int>(draw_below(rng, 2)), rng));
    Ideal cand(ctx, std::move(forms));
    if (krull_dim(cand) == ctx->num_vars - c) {
      tag = "ci(" + std::to_string(c) + ")";
      return cand;
    }
  }
  tag = "principal(2)";
  std::vector<int> e(static_cast<size_t>(ctx->num_vars), 0);
  e[0] = 2;
  return Ideal(ctx, {mono_poly(ctx, std::move(e))});
}

Ideal draw_factor(const RingPtr& ctx, std::mt19937_64& rng, int gen_cap, std::string& tag) {
  if (draw_below(rng, 2) == 0) return draw_structured_ideal(ctx, rng, tag);
  return draw_monomial_ideal(ctx, rng, gen_cap, tag);
}

// ---- campaigns -------------------------------------------------------------

void check_common(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw Error("trials must be positive");
  if (cfg.d < 1 || cfg.d > 5) throw Error("size parameter d must be between 1 and 5");
}

void check_ambient(const CampaignConfig& cfg, int lo, int hi) {
  if (cfg.ambient_n < lo || cfg.ambient_n > hi)
    throw Error("campaign " + cfg.campaign + " needs --n between " + std::to_string(lo) +
                " and " + std::to_string(hi));
}

using TrialFn = std::function<TrialRecord(uint64_t, std::mt19937_64&, bool)>;

void run_random_campaign(CampaignResult& result, const TrialFn& trial) {
  const CampaignConfig& cfg = result.config;
  result.target = cfg.trials;
  const uint64_t max_draws = static_cast<uint64_t>(cfg.trials) * 20 + 50;
  while (result.accepted < result.target && result.draws < max_draws) {
    uint64_t k = result.draws++;
    std::mt19937_64 rng(mix(cfg.seed, k));
    bool cross = result.accepted % 10 == 0;
    auto t0 = std::chrono::steady_clock::now();
    TrialRecord rec = trial(k, rng, cross);
    auto t1 = std::chrono::steady_clock::now();
    rec.draw_index = k;
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (rec.verdict == Verdict::hypothesis_rejected) {
      ++result.rejected;
    } else {
      ++result.accepted;
      if (rec.verdict == Verdict::pass) ++result.passed;
      else ++result.failed;
    }
    result.records.push_back(std::move(rec));
  }
}

CampaignResult campaign_product(const CampaignConfig& cfg) {
  check_common(cfg);
  check_ambient(cfg, 2, 3);
  RingPtr ctx = make_ring(cfg.ambient_n + 1, cfg.char_p);
  int gen_cap = std::min(cfg.d, 3);

  CampaignResult result;
  result.config = cfg;
  run_random_campaign(result, [&](uint64_t, std::mt19937_64& rng, bool cross) {
    TrialRecord rec;
    std::string tag_i, tag_j;
    Ideal a = draw_factor(ctx, rng, gen_cap, tag_i);
    Ideal b = draw_factor(ctx, rng, gen_cap, tag_j);
    rec.description = "P^" + std::to_string(cfg.ambient_n) + ": " + tag_i + " x " + tag_j;
    rec.replay = ring_line(ctx);
    append_ideal_block(rec.replay, "I", a);
    append_ideal_block(rec.replay, "J", b);

    int meet = krull_dim(sum(a, b));
    put(rec.quantities, "dim_sum", meet);
    if (meet > 1) {
      rec.verdict = Verdict::hypothesis_rejected;
      return rec;
    }
    int reg_a = regularity_betti(a);
    int reg_b = regularity_betti(b);
    int reg_ab = regularity_betti(product(a, b));
    put(rec.quantities, "reg_i", reg_a);
    put(rec.quantities, "reg_j", reg_b);
    put(rec.quantities, "reg_prod", reg_ab);
    put(rec.quantities, "bound", reg_a + reg_b);
    rec.verdict = reg_ab <= reg_a + reg_b ? Verdict::pass : Verdict::fail;
    if (cross && rec.verdict == Verdict::pass) {
      bool ok = cohomology_pins_regularity(a, reg_a);
      rec.quantities.emplace_back("xcheck", ok ? "match" : "mismatch");
      if (!ok) rec.verdict = Verdict::fail;
    }
    return rec;
  });
  return result;
}

// Shared driver for the arrangement campaigns: draw d subspaces, enforce the
// pairwise hypothesis, and compare the sheaf regularity against the member
// count. The cross-check recomputes the regularity through the resolution
// route, which must agree because arrangement ideals are saturated.
TrialRecord arrangement_trial(const RingPtr& ctx, int d, int max_pair_dim,
                              std::vector<LinearSubspace> subs, bool cross,
                              std::string description) {
  TrialRecord rec;
  rec.description = std::move(description);
  rec.replay = ring_line(ctx);
  append_arrangement_block(rec.replay, "A", subs);

  auto dims = pairwise_intersection_dims(subs);
  int worst = -1;
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j) worst = std::max(worst, dims[i][j]);
  put(rec.quantities, "max_pair_dim", worst);
  if (worst > max_pair_dim) {
    rec.verdict = Verdict::hypothesis_rejected;
    return rec;
  }

  Ideal arr = arrangement_ideal(subs);
  int sreg = sheaf_regularity(arr);
  put(rec.quantities, "sheaf_reg", sreg);
  put(rec.quantities, "bound", d);
  rec.verdict = sreg <= d ? Verdict::pass : Verdict::fail;
  if (cross && rec.verdict == Verdict::pass) {
    bool ok = regularity_betti(arr) == sreg;
    rec.quantities.emplace_back("xcheck", ok ? "match" : "mismatch");
    if (!ok) rec.verdict = Verdict::fail;
  }
  return rec;
}

CampaignResult campaign_disjoint_union(const CampaignConfig& cfg) {
  check_common(cfg);
  check_ambient(cfg, 2, 5);
  RingPtr ctx = make_ring(cfg.ambient_n + 1, cfg.char_p);
  // dims at most (n-1)/2, so any two members can miss each other
  int dim_cap = (cfg.ambient_n - 1) / 2;

  CampaignResult result;
  result.config = cfg;
  run_random_campaign(result, [&](uint64_t, std::mt19937_64& rng, bool cross) {
    std::vector<LinearSubspace> subs;
    std::string shape;
    for (int i = 0; i < cfg.d; ++i) {
      int dim = static_cast<int>(draw_below(rng, static_cast<uint64_t>(dim_cap + 1)));
      subs.push_back(random_subspace(ctx, dim, rng()));
      shape += (i ? "," : "") + std::to_string(dim);
    }
    return arrangement_trial(ctx, cfg.d, -1, std::move(subs), cross,
                             "P^" + std::to_string(cfg.ambient_n) + ": dims " + shape);
  });
  return result;
}

CampaignResult campaign_lines(const CampaignConfig& cfg) {
  check_common(cfg);
  check_ambient(cfg, 2, 3);
  RingPtr ctx = make_ring(cfg.ambient_n + 1, cfg.char_p);

  CampaignResult result;
  result.config = cfg;
  run_random_campaign(result, [&](uint64_t k, std::mt19937_64& rng, bool cross) {
    std::vector<LinearSubspace> subs;
    std::string family;
    if (k % 2 == 0) {
      family = "generic lines";
      for (int i = 0; i < cfg.d; ++i) subs.push_back(random_subspace(ctx, 1, rng()));
    } else {
      // all members through one point, so the intersections are real
      family = "concurrent lines";
      std::vector<uint32_t> hub = draw_point(ctx, rng);
      for (int i = 0; i < cfg.d; ++i) {
        std::vector<uint32_t> other = draw_point(ctx, rng);
        while (same_projective_point(ctx, hub, other)) other = draw_point(ctx, rng);
        subs.push_back(subspace_spanned_by(ctx, {hub, other}));
      }
    }
    return arrangement_trial(ctx, cfg.d, 0, std::move(subs), cross,
                             "P^" + std::to_string(cfg.ambient_n) + ": " + family);
  });
  return result;
}

CampaignResult campaign_two_planes(const CampaignConfig& cfg) {
  check_common(cfg);
  check_ambient(cfg, 3, 5);
  RingPtr ctx = make_ring(cfg.ambient_n + 1, cfg.char_p);

  CampaignResult result;
  result.config = cfg;
  run_random_campaign(result, [&](uint64_t, std::mt19937_64& rng, bool cross) {
    std::vector<LinearSubspace> subs;
    for (int i = 0; i < cfg.d; ++i) subs.push_back(random_subspace(ctx, 2, rng()));
    return arrangement_trial(ctx, cfg.d, 1, std::move(subs), cross,
                             "P^" + std::to_string(cfg.ambient_n) + ": planes");
  });
  return result;
}

void push_corpus_record(CampaignResult& result, TrialRecord rec) {
  rec.draw_index = result.draws++;
  ++result.accepted;
  if (rec.verdict == Verdict::pass) ++result.passed;
  else ++result.failed;
  result.records.push_back(std::move(rec));
}

CampaignResult campaign_cone(const CampaignConfig& cfg) {
  CampaignResult result;
  result.config = cfg;
  std::vector<CorpusEntry> corpus = corpus_ideals(cfg.char_p);
  result.target = static_cast<int>(corpus.size()) * 2;
  for (const CorpusEntry& entry : corpus) {
    int base = sheaf_regularity(entry.ideal);
    // The cone is taken over the closed subscheme, so the base ideal is
    // saturated first; coning does not commute with saturation, and the
    // regularity of the sheaf only matches across the extension for the
    // subscheme's full ideal.
    Ideal scheme = saturate(entry.ideal);
    for (int extra = 1; extra <= 2; ++extra) {
      auto t0 = std::chrono::steady_clock::now();
      TrialRecord rec;
      rec.description = "cone(" + entry.name + ", +" + std::to_string(extra) + ")";
      Ideal cone = cone_ideal(scheme, extra);
      rec.replay = ideal_document(cone, "C");
      int creg = sheaf_regularity(cone);
      put(rec.quantities, "sheaf_reg", base);
      put(rec.quantities, "cone_reg", creg);
      rec.verdict = creg == base ? Verdict::pass : Verdict::fail;
      auto t1 = std::chrono::steady_clock::now();
      rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      push_corpus_record(result, std::move(rec));
    }
  }
  return result;
}

CampaignResult campaign_reg_equiv(const CampaignConfig& cfg) {
  CampaignResult result;
  result.config = cfg;
  std::vector<CorpusEntry> corpus = corpus_ideals(cfg.char_p);
  result.target = static_cast<int>(corpus.size()) * 4;
  for (const CorpusEntry& entry : corpus) {
    int reg = regularity_betti(entry.ideal);
    for (int m = reg - 1; m <= reg + 2; ++m) {
      auto t0 = std::chrono::steady_clock::now();
      TrialRecord rec;
      rec.description = entry.name + " at m=" + std::to_string(m);
      rec.replay = ideal_document(entry.ideal, "I");
      RegularityCharacterizations c = check_regularity_characterizations(entry.ideal, m, cfg.window);
      put(rec.quantities, "m", m);
      put(rec.quantities, "reg", reg);
      rec.quantities.emplace_back("at_m", c.vanishing_at_m ? "true" : "false");
      rec.quantities.emplace_back("from_m", c.vanishing_from_m ? "true" : "false");
      rec.quantities.emplace_back("betti_bound", c.betti_bound ? "true" : "false");
      bool agree = c.vanishing_at_m == c.vanishing_from_m && c.vanishing_from_m == c.betti_bound;
      rec.verdict = agree ? Verdict::pass : Verdict::fail;
      auto t1 = std::chrono::steady_clock::now();
      rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      push_corpus_record(result, std::move(rec));
    }
  }
  return result;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_rejected: return "hypothesis-rejected";
  }
  throw InternalError("unhandled verdict");
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.ambient_n + 1 > 6) throw Error("at most six variables at desk scale");
  if (config.campaign == "thm-prod") return campaign_product(config);
  if (config.campaign == "disjoint-union") return campaign_disjoint_union(config);
  if (config.campaign == "lines") return campaign_lines(config);
  if (config.campaign == "two-planes") return campaign_two_planes(config);
  if (config.campaign == "cone") return campaign_cone(config);
  if (config.campaign == "reg-equiv") return campaign_reg_equiv(config);
  throw Error("unknown campaign '" + config.campaign +
              "'; expected thm-prod, disjoint-union, lines, two-planes, cone, or reg-equiv");
}

std::vector<CorpusEntry> corpus_ideals(uint32_t p) {
  RingPtr p1 = make_ring(2, p);
  RingPtr p2 = make_ring(3, p);
  RingPtr p3 = make_ring(4, p);
  uint32_t neg1 = p - 1;

  auto mono = [](const RingPtr& ctx, std::vector<int> e) { return mono_poly(ctx, std::move(e)); };
  auto binom = [&](const RingPtr& ctx, std::vector<int> a, std::vector<int> b) {
    return Polynomial::from_terms(ctx, {Term{1, Monomial(std::move(a))},
                                        Term{neg1, Monomial(std::move(b))}});
  };

  std::vector<CorpusEntry> out;
  out.push_back({"principal-P2", Ideal(p2, {mono(p2, {2, 0, 0})})});
  out.push_back({"koszul-P2", Ideal(p2, {mono(p2, {1, 0, 0}), mono(p2, {0, 1, 0}),
                                         mono(p2, {0, 0, 1})})});
  out.push_back({"pair-P2", Ideal(p2, {mono(p2, {0, 0, 1}), mono(p2, {1, 1, 0})})});
  out.push_back({"twisted-cubic-P3",
                 Ideal(p3, {binom(p3, {0, 2, 0, 0}, {1, 0, 1, 0}),
                            binom(p3, {0, 1, 1, 0}, {1, 0, 0, 1}),
                            binom(p3, {0, 0, 2, 0}, {0, 1, 0, 1})})});
  for (int k = 2; k <= 5; ++k) {
    std::mt19937_64 rng(mix(0x706f696e74, static_cast<uint64_t>(k)));
    out.push_back({"points" + std::to_string(k) + "-P2", points_ideal(p2, draw_points(p2, k, rng))});
  }
  out.push_back({"disjoint-lines-P3",
                 intersect(Ideal(p3, {mono(p3, {1, 0, 0, 0}), mono(p3, {0, 1, 0, 0})}),
                           Ideal(p3, {mono(p3, {0, 0, 1, 0}), mono(p3, {0, 0, 0, 1})}))});
  out.push_back({"nonsaturated-P1", Ideal(p1, {mono(p1, {2, 0}), mono(p1, {1, 1})})});
  out.push_back({"unit-P2", Ideal::unit(p2)});
  out.push_back({"ci-quadrics-P3", Ideal(p3, {binom(p3, {2, 0, 0, 0}, {0, 1, 1, 0}),
                                              binom(p3, {0, 2, 0, 0}, {1, 0, 0, 1})})});
  return out;
}

}  // namespace cmreg
