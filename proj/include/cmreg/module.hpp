#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cmreg/ring.hpp"

namespace cmreg {

class ModuleOrder;
using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

struct FreeModule;
using FreeModulePtr = std::shared_ptr<const FreeModule>;

// A term c * mono * e_component of a free module element.
struct ModTerm {
  uint32_t coeff;
  Monomial mono;
  int component;
};

// Order on free-module terms. The base order compares by the ring's monomial
// order with ties broken toward the smaller component. A Schreyer order is
// induced by the lead terms of a Groebner basis one level down: terms compare
// by the images m * lead(g_component) in the previous module, ties again
// toward the smaller component. Towers of these drive iterated syzygies.
class ModuleOrder {
 public:
  static ModuleOrderPtr base(MonomialOrder ring_order);
  static ModuleOrderPtr schreyer(ModuleOrderPtr prev, std::vector<ModTerm> gb_leads);
  // -1 / 0 / +1; coefficients are ignored.
  int compare(const ModTerm& a, const ModTerm& b) const;

 private:
  ModuleOrder() = default;
  MonomialOrder ring_order_{};
  ModuleOrderPtr prev_;          // null for the base order
  std::vector<ModTerm> leads_;   // lead terms of the inducing basis
};

// Graded free module ⊕_i S(-twists[i]) with a term order.
struct FreeModule {
  RingPtr ctx;
  std::vector<int> twists;
  ModuleOrderPtr order;
  int rank() const { return static_cast<int>(twists.size()); }
};

FreeModulePtr make_free_module(RingPtr ctx, std::vector<int> twists, ModuleOrderPtr order);
// The ring viewed as the rank-1 free module S(0) under its own order.
FreeModulePtr ring_module(RingPtr ctx);
bool same_module(const FreeModule& a, const FreeModule& b);

// Element of a free module in canonical form: terms strictly decreasing in
// the module order, coefficients nonzero.
class FreeModuleElement {
 public:
  static FreeModuleElement zero(FreeModulePtr mod) { return FreeModuleElement(std::move(mod)); }
  static FreeModuleElement from_terms(FreeModulePtr mod, std::vector<ModTerm> terms);
  static FreeModuleElement from_components(FreeModulePtr mod, const std::vector<Polynomial>& comps);
  static FreeModuleElement from_polynomial(const Polynomial& f);  // in ring_module
  Polynomial to_polynomial() const;                               // requires rank-1 module

  const FreeModulePtr& module() const { return mod_; }
  const std::vector<ModTerm>& terms() const { return terms_; }
  std::vector<Polynomial> components() const;
  bool is_zero() const { return terms_.empty(); }
  const ModTerm& lead() const;

  // module degree of a term: mono degree + twist of its component
  int term_degree(const ModTerm& t) const;
  // common degree of all terms; nullopt when zero or inhomogeneous
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;  // zero counts as homogeneous

  FreeModuleElement add(const FreeModuleElement& g) const;
  FreeModuleElement sub(const FreeModuleElement& g) const;
  FreeModuleElement negate() const;
  FreeModuleElement scale(uint32_t c) const;
  FreeModuleElement mul_term(uint32_t c, const Monomial& m) const;
  FreeModuleElement monic() const;

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b);

 private:
  explicit FreeModuleElement(FreeModulePtr mod) : mod_(std::move(mod)) {}
  FreeModulePtr mod_;
  std::vector<ModTerm> terms_;
};

}  // namespace cmreg
