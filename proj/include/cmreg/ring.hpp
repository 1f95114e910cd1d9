#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/errors.hpp"
#include "cmreg/gf.hpp"

namespace cmreg {

enum class OrderKind { grevlex, lex, elimination };

// A monomial order. grevlex and lex are the classical orders; elimination
// with leading block size `block` compares the first `block` exponents
// grevlex-first, so the leading variables can be eliminated.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int block = 0;  // meaningful for elimination only
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// S = GF(p)[x0, ..., x_{num_vars-1}] with a fixed monomial order.
// Contexts are compared by value: two contexts with equal num_vars,
// characteristic, and order are interchangeable.
struct RingContext {
  int num_vars;
  Zp field;
  MonomialOrder order;
};

RingPtr make_ring(int num_vars, uint32_t char_p, MonomialOrder order = {});
bool same_ring(const RingContext& a, const RingContext& b);
void require_same_ring(const RingContext& a, const RingContext& b);

// Exponent vector with cached total degree.
class Monomial {
 public:
  explicit Monomial(int num_vars) : exps_(static_cast<size_t>(num_vars), 0), degree_(0) {}
  explicit Monomial(std::vector<int> exponents);
  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& m) const;
  Monomial mul(const Monomial& m) const;
  Monomial div(const Monomial& m) const;  // requires m.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& m) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_;
};

// -1 / 0 / +1 as a is smaller than / equal to / greater than b.
int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

struct Term {
  uint32_t coeff;  // nonzero residue mod p
  Monomial mono;
};

struct DegreeCheck {
  bool homogeneous = false;
  std::optional<int> degree;  // empty for the zero polynomial (any degree fits)
};

// Polynomial in canonical form: terms strictly decreasing in the ring order,
// all coefficients nonzero. The zero polynomial has no terms.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(RingPtr ctx, uint32_t c);
  static Polynomial variable(RingPtr ctx, int i);
  // Canonicalizes: sorts, merges equal monomials mod p, drops zeros.
  static Polynomial from_terms(RingPtr ctx, std::vector<Term> terms);

  const RingPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead_term() const;
  int degree() const;  // max term degree; -1 for zero

  Polynomial add(const Polynomial& g) const;
  Polynomial sub(const Polynomial& g) const;
  Polynomial negate() const;
  Polynomial mul(const Polynomial& g) const;
  Polynomial scale(uint32_t c) const;
  Polynomial mul_term(uint32_t c, const Monomial& m) const;
  Polynomial monic() const;  // requires nonzero

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  explicit Polynomial(RingPtr ctx) : ctx_(std::move(ctx)) {}
  RingPtr ctx_;
  std::vector<Term> terms_;
};

DegreeCheck is_homogeneous(const Polynomial& f);
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

// Grammar:  poly := ['+'|'-'] term (('+'|'-') term)*
//           term := [integer] ('*'? var)*
//           var  := 'x' index ('^' exponent)?
// Whitespace is insignificant; integers are reduced mod p.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ctx);

// Canonical rendering; parse_polynomial(format_polynomial(f)) == f.
// Residues above p/2 print as subtracted positive values.
std::string format_polynomial(const Polynomial& f);

// All monomials of the given total degree, in a fixed deterministic order
// (descending lexicographic on exponent vectors).
std::vector<Monomial> monomials_of_degree(int num_vars, int degree);

}  // namespace cmreg
