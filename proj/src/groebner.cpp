#include "cmreg/groebner.hpp"

#include <algorithm>
#include <set>

namespace cmreg {

namespace {

bool lead_divides(const ModTerm& lead, const ModTerm& t) {
  return lead.component == t.component && lead.mono.divides(t.mono);
}

}  // namespace

DivisionResult divide(const FreeModuleElement& f, const std::vector<FreeModuleElement>& divisors) {
  const FreeModulePtr& mod = f.module();
  const Zp& F = mod->ctx->field;
  DivisionResult out{FreeModuleElement::zero(mod), {}};
  out.quotients.assign(divisors.size(), Polynomial::zero(mod->ctx));

  FreeModuleElement work = f;
  std::vector<ModTerm> rem_terms;  // collected in decreasing order
  while (!work.is_zero()) {
    const ModTerm& t = work.lead();
    bool reduced = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      if (divisors[k].is_zero()) continue;
      const ModTerm& l = divisors[k].lead();
      if (!lead_divides(l, t)) continue;
      uint32_t c = F.div(t.coeff, l.coeff);
      Monomial m = t.mono.div(l.mono);
      work = work.sub(divisors[k].mul_term(c, m));
      out.quotients[k] = out.quotients[k].add(
          Polynomial::from_terms(mod->ctx, {Term{c, std::move(m)}}));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back(t);
      // drop the lead: subtract it
      work = work.sub(FreeModuleElement::from_terms(mod, {t}));
    }
  }
  out.remainder = FreeModuleElement::from_terms(mod, std::move(rem_terms));
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(*f.context(), *gb.module->ctx);
  if (gb.module->rank() != 1) throw ContextMismatchError("polynomial reduced against a module basis");
  return divide(FreeModuleElement::from_polynomial(f), gb.elements).remainder.to_polynomial();
}

FreeModuleElement normal_form(const FreeModuleElement& f, const GroebnerBasis& gb) {
  if (!same_module(*f.module(), *gb.module)) throw ContextMismatchError("element of a different module");
  return divide(f, gb.elements).remainder;
}

namespace {

// inter-reduce a list of (nonzero, monic) elements into a reduced basis:
// drop elements whose lead is divisible by another's lead, then tail-reduce
// each survivor against the others. Preserves the generated module when the
// input is a Groebner basis of it.
std::vector<FreeModuleElement> inter_reduce(std::vector<FreeModuleElement> elems,
                                            const FreeModulePtr& mod) {
  // minimalize lead terms; on equal leads the earlier element survives
  std::vector<bool> dead(elems.size(), false);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = 0; j < elems.size(); ++j) {
      if (i == j || dead[j]) continue;
      if (lead_divides(elems[j].lead(), elems[i].lead())) {
        // prefer dropping i unless j's lead is strictly bigger support; on
        // mutual divisibility (equal leads) keep the smaller index
        if (!lead_divides(elems[i].lead(), elems[j].lead()) || j < i) {
          dead[i] = true;
          break;
        }
      }
    }
  }
  std::vector<FreeModuleElement> minimal;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (!dead[i]) minimal.push_back(std::move(elems[i]));
  }
  // tail-reduce: NF of each against the others; leads are untouched because
  // no other lead divides them
  std::vector<FreeModuleElement> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FreeModuleElement> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    FreeModuleElement r = divide(minimal[i], others).remainder;
    if (r.is_zero()) throw InternalError("tail reduction killed a minimal basis element");
    reduced.push_back(r.monic());
  }
  const ModuleOrder& ord = *mod->order;
  std::sort(reduced.begin(), reduced.end(), [&ord](const FreeModuleElement& a, const FreeModuleElement& b) {
    return ord.compare(a.lead(), b.lead()) > 0;
  });
  return reduced;
}

GroebnerBasis buchberger_impl(const std::vector<Polynomial>& gens, bool require_homogeneous) {
  if (gens.empty()) throw Error("buchberger needs at least one generator");
  RingPtr ctx = gens.front().context();
  FreeModulePtr mod = ring_module(ctx);

  std::vector<FreeModuleElement> basis;
  for (const Polynomial& g : gens) {
    require_same_ring(*g.context(), *ctx);
    if (require_homogeneous && !is_homogeneous(g).homogeneous) {
      throw Error("buchberger requires homogeneous generators");
    }
    if (!g.is_zero()) basis.push_back(FreeModuleElement::from_polynomial(g.monic()));
  }
  if (basis.empty()) throw Error("buchberger needs a nonzero generator");

  struct Pair {
    int degree;  // degree of the lcm = degree of the s-polynomial
    size_t i, j;
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<Pair> pending;
  auto lcm_of = [&basis](size_t i, size_t j) {
    return Monomial::lcm(basis[i].lead().mono, basis[j].lead().mono);
  };
  auto push_pairs_with = [&](size_t jnew) {
    for (size_t i = 0; i < jnew; ++i) {
      pending.insert(Pair{lcm_of(i, jnew).degree(), i, jnew});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

  const Zp& F = ctx->field;
  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    const size_t i = pr.i, j = pr.j;

    // criterion 1: coprime lead monomials reduce to zero
    if (basis[i].lead().mono.coprime(basis[j].lead().mono)) continue;
    // criterion 2 (chain): some k divides the lcm and both (i,k), (j,k) are
    // no longer pending, so this pair is redundant
    Monomial lcm = lcm_of(i, j);
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].lead().mono.divides(lcm)) continue;
      Pair pik{lcm_of(std::min(i, k), std::max(i, k)).degree(), std::min(i, k), std::max(i, k)};
      Pair pjk{lcm_of(std::min(j, k), std::max(j, k)).degree(), std::min(j, k), std::max(j, k)};
      if (pending.count(pik) == 0 && pending.count(pjk) == 0) chained = true;
    }
    if (chained) continue;

    // s-polynomial and its normal form
    uint32_t ci = F.inv(basis[i].lead().coeff);
    uint32_t cj = F.inv(basis[j].lead().coeff);
    FreeModuleElement s = basis[i]
                              .mul_term(ci, lcm.div(basis[i].lead().mono))
                              .sub(basis[j].mul_term(cj, lcm.div(basis[j].lead().mono)));
    FreeModuleElement r = divide(s, basis).remainder;
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs_with(basis.size() - 1);
    }
  }
  std::vector<FreeModuleElement> reduced = inter_reduce(std::move(basis), mod);
  return GroebnerBasis{mod, std::move(reduced)};
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) { return buchberger_impl(gens, true); }

GroebnerBasis buchberger_general(const std::vector<Polynomial>& gens) {
  return buchberger_impl(gens, false);
}

std::vector<FreeModuleElement> syzygy_basis(const GroebnerBasis& gb) {
  const std::vector<FreeModuleElement>& G = gb.elements;
  const RingPtr& ctx = gb.module->ctx;
  const Zp& F = ctx->field;

  // ambient of the syzygies: one generator above each basis element, twisted
  // by its degree, ordered by the induced Schreyer order
  std::vector<int> twists;
  std::vector<ModTerm> leads;
  for (const FreeModuleElement& g : G) {
    auto d = g.homogeneous_degree();
    if (!d) throw Error("syzygy_basis requires homogeneous basis elements");
    twists.push_back(*d);
    leads.push_back(g.lead());
  }
  FreeModulePtr syz_mod =
      make_free_module(ctx, std::move(twists), ModuleOrder::schreyer(gb.module->order, leads));

  std::vector<FreeModuleElement> syzygies;
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].lead().component != G[j].lead().component) continue;
      Monomial lcm = Monomial::lcm(G[i].lead().mono, G[j].lead().mono);
      Monomial ui = lcm.div(G[i].lead().mono);
      Monomial uj = lcm.div(G[j].lead().mono);
      uint32_t ci = F.inv(G[i].lead().coeff);
      uint32_t cj = F.inv(G[j].lead().coeff);
      FreeModuleElement s = G[i].mul_term(ci, ui).sub(G[j].mul_term(cj, uj));
      DivisionResult div = divide(s, G);
      if (!div.remainder.is_zero()) {
        throw Error("syzygy_basis: input is not a Groebner basis (S-pair fails to reduce)");
      }
      // syzygy = ci*ui*e_i - cj*uj*e_j - sum quotients; its lead is ci*ui*e_i
      std::vector<ModTerm> terms;
      terms.push_back(ModTerm{ci, ui, static_cast<int>(i)});
      terms.push_back(ModTerm{F.neg(cj), uj, static_cast<int>(j)});
      for (size_t k = 0; k < div.quotients.size(); ++k) {
        for (const Term& qt : div.quotients[k].terms()) {
          terms.push_back(ModTerm{F.neg(qt.coeff), qt.mono, static_cast<int>(k)});
        }
      }
      FreeModuleElement syz = FreeModuleElement::from_terms(syz_mod, std::move(terms));
      // Schreyer: the lead of the (i,j) syzygy is (lcm/lead_i) e_i
      if (syz.lead().component != static_cast<int>(i) || !(syz.lead().mono == ui)) {
        throw InternalError("syzygy lead term violates the Schreyer order invariant");
      }
      syzygies.push_back(std::move(syz));
    }
  }
  if (syzygies.empty()) return syzygies;
  return inter_reduce(std::move(syzygies), syz_mod);
}

}  // namespace cmreg
