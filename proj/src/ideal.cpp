#include "cmreg/ideal.hpp"

#include <algorithm>

namespace cmreg {

Ideal::Ideal(RingPtr ctx, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)),
      gb_(std::make_shared<std::shared_ptr<const GroebnerBasis>>()),
      saturated_(std::make_shared<std::optional<bool>>()) {
  for (Polynomial& g : generators) {
    require_same_ring(*g.context(), *ctx_);
    if (g.is_zero()) continue;
    if (!is_homogeneous(g).homogeneous) throw Error("ideal generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ctx) {
  std::vector<Polynomial> g{Polynomial::constant(ctx, 1)};
  return Ideal(std::move(ctx), std::move(g));
}

bool Ideal::is_unit() const {
  if (is_zero()) return false;
  const GroebnerBasis& gb = groebner_basis();
  return gb.elements.size() == 1 && gb.elements[0].lead().mono.is_one();
}

const GroebnerBasis& Ideal::groebner_basis() const {
  if (!*gb_) {
    if (gens_.empty()) {
      *gb_ = std::make_shared<const GroebnerBasis>(GroebnerBasis{ring_module(ctx_), {}});
    } else {
      *gb_ = std::make_shared<const GroebnerBasis>(buchberger(gens_));
    }
  }
  return **gb_;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(*f.context(), *ctx_);
  if (f.is_zero()) return true;
  if (is_zero()) return false;
  return normal_form(f, groebner_basis()).is_zero();
}

bool equal_ideals(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  for (const Polynomial& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  for (const Polynomial& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) {
    for (const Polynomial& g : b.generators()) {
      Polynomial h = f.mul(g);
      if (h.is_zero()) continue;
      if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
    }
  }
  return Ideal(a.context(), std::move(gens));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (gens.empty()) return Ideal::zero(a.context());
  // normalize to the reduced basis so redundant generators disappear
  GroebnerBasis gb = buchberger(gens);
  std::vector<Polynomial> reduced;
  reduced.reserve(gb.elements.size());
  for (const FreeModuleElement& e : gb.elements) reduced.push_back(e.to_polynomial());
  return Ideal(a.context(), std::move(reduced));
}

namespace {

// shift a polynomial into the elimination ring (one leading variable t at
// index 0) and back
Polynomial shift_up(const Polynomial& f, const RingPtr& ext) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    std::vector<int> e(static_cast<size_t>(ext->num_vars), 0);
    for (int i = 0; i < t.mono.num_vars(); ++i) e[static_cast<size_t>(i + 1)] = t.mono.exponent(i);
    terms.push_back(Term{t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial shift_down(const Polynomial& f, const RingPtr& base) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    std::vector<int> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    terms.push_back(Term{t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(base, std::move(terms));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  const RingPtr& ctx = a.context();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ctx);

  RingPtr ext = make_ring(ctx->num_vars + 1, ctx->field.p(),
                          MonomialOrder{OrderKind::elimination, 1});
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1).sub(t);
  std::vector<Polynomial> mixed;
  for (const Polynomial& f : a.generators()) mixed.push_back(t.mul(shift_up(f, ext)));
  for (const Polynomial& g : b.generators()) mixed.push_back(one_minus_t.mul(shift_up(g, ext)));

  GroebnerBasis gb = buchberger_general(mixed);
  std::vector<Polynomial> eliminated;
  for (const FreeModuleElement& e : gb.elements) {
    Polynomial f = e.to_polynomial();
    // under the elimination order a t-free lead term forces a t-free element
    if (f.lead_term().mono.exponent(0) == 0) eliminated.push_back(shift_down(f, ctx));
  }
  if (eliminated.empty()) return Ideal::zero(ctx);

  // re-reduce in the original ring so generators are the canonical basis
  GroebnerBasis clean = buchberger(eliminated);
  std::vector<Polynomial> gens;
  for (const FreeModuleElement& e : clean.elements) gens.push_back(e.to_polynomial());
  Ideal result(ctx, std::move(gens));
  // contract: the result sits inside both factors
  for (const Polynomial& g : result.generators()) {
    if (!a.contains(g) || !b.contains(g)) throw InternalError("intersection produced a stray element");
  }
  return result;
}

namespace {

// (a : f) for a single nonzero f, as (a ∩ (f)) * f^{-1}
Ideal colon_single(const Ideal& a, const Polynomial& f) {
  const RingPtr& ctx = a.context();
  Ideal af = intersect(a, Ideal(ctx, {f}));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : af.generators()) {
    DivisionResult d = divide(FreeModuleElement::from_polynomial(g),
                              {FreeModuleElement::from_polynomial(f)});
    if (!d.remainder.is_zero()) throw InternalError("element of I ∩ (f) not divisible by f");
    gens.push_back(d.quotients[0]);
  }
  return Ideal(ctx, std::move(gens));
}

}  // namespace

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.context(), *b.context());
  if (b.is_zero()) return Ideal::unit(a.context());
  std::optional<Ideal> acc;
  for (const Polynomial& f : b.generators()) {
    Ideal part = colon_single(a, f);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

Ideal saturate(const Ideal& i) {
  const RingPtr& ctx = i.context();
  if (i.saturated_hint().value_or(false)) return i;
  std::vector<Polynomial> vars;
  for (int v = 0; v < ctx->num_vars; ++v) vars.push_back(Polynomial::variable(ctx, v));
  Ideal irrelevant(ctx, std::move(vars));

  Ideal current = i;
  for (;;) {
    Ideal next = colon(current, irrelevant);
    if (equal_ideals(next, current)) {
      current.set_saturated_hint(true);
      return current;
    }
    current = next;
  }
}

int krull_dim(const Ideal& i) {
  const RingPtr& ctx = i.context();
  int n = ctx->num_vars;
  std::vector<Monomial> leads;
  for (const FreeModuleElement& e : i.groebner_basis().elements) leads.push_back(e.lead().mono);
  // dim S/in(I) = size of the largest variable subset meeting no lead support
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Monomial& m : leads) {
      bool support_inside = true;
      for (int v = 0; v < n && support_inside; ++v) {
        if (m.exponent(v) > 0 && !(mask & (1u << v))) support_inside = false;
      }
      if (support_inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

int64_t hilbert_function(const Ideal& i, int degree) {
  if (degree < 0) return 0;
  const RingPtr& ctx = i.context();
  if (i.is_zero()) return 0;
  std::vector<Monomial> leads;
  for (const FreeModuleElement& e : i.groebner_basis().elements) leads.push_back(e.lead().mono);
  int64_t count = 0;
  for (const Monomial& m : monomials_of_degree(ctx->num_vars, degree)) {
    for (const Monomial& l : leads) {
      if (l.divides(m)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace cmreg
