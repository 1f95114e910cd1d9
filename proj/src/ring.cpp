#include "cmreg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmreg {

RingPtr make_ring(int num_vars, uint32_t char_p, MonomialOrder order) {
  if (num_vars < 1) throw Error("ring needs at least one variable");
  if (order.kind == OrderKind::elimination && (order.block < 1 || order.block >= num_vars)) {
    throw Error("elimination block must satisfy 1 <= block < num_vars");
  }
  return std::make_shared<RingContext>(RingContext{num_vars, Zp(char_p), order});
}

bool same_ring(const RingContext& a, const RingContext& b) {
  return a.num_vars == b.num_vars && a.field == b.field && a.order == b.order;
}

void require_same_ring(const RingContext& a, const RingContext& b) {
  if (!same_ring(a, b)) throw ContextMismatchError("operands live in different ring contexts");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)), degree_(0) {
  for (int e : exps_) {
    if (e < 0) throw Error("negative exponent");
    degree_ += e;
  }
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::mul(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
  r.degree_ += m.degree_;
  return r;
}

Monomial Monomial::div(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= m.exps_[i];
    if (r.exps_[i] < 0) throw InternalError("monomial division not exact");
  }
  r.degree_ -= m.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& m) const {
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && m.exps_[i] > 0) return false;
  }
  return true;
}

namespace {

// grevlex on the exponent range [lo, hi): higher degree wins; on equal degree
// the vector with the smaller exponent at the last differing position wins.
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  int n = a.num_vars();
  switch (order.kind) {
    case OrderKind::grevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::lex:
      for (int i = 0; i < n; ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    case OrderKind::elimination: {
      int c = grevlex_range(a, b, 0, order.block);
      if (c != 0) return c;
      return grevlex_range(a, b, order.block, n);
    }
  }
  throw InternalError("unknown monomial order");
}

Polynomial Polynomial::constant(RingPtr ctx, uint32_t c) {
  Polynomial f(ctx);
  uint32_t r = c % ctx->field.p();
  if (r != 0) f.terms_.push_back(Term{r, Monomial(ctx->num_vars)});
  return f;
}

Polynomial Polynomial::variable(RingPtr ctx, int i) {
  if (i < 0 || i >= ctx->num_vars) throw Error("variable index out of range");
  std::vector<int> e(static_cast<size_t>(ctx->num_vars), 0);
  e[static_cast<size_t>(i)] = 1;
  Polynomial f(ctx);
  f.terms_.push_back(Term{1, Monomial(std::move(e))});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ctx, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.num_vars() != ctx->num_vars) throw ContextMismatchError("monomial has wrong variable count");
  }
  std::sort(terms.begin(), terms.end(), [&ctx](const Term& a, const Term& b) {
    return compare(ctx->order, a.mono, b.mono) > 0;
  });
  Polynomial f(ctx);
  const Zp& F = ctx->field;
  for (Term& t : terms) {
    uint32_t c = t.coeff % F.p();
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = F.add(f.terms_.back().coeff, c);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back(Term{c, std::move(t.mono)});
    }
  }
  return f;
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no lead term");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::add(const Polynomial& g) const {
  require_same_ring(*ctx_, *g.ctx_);
  Polynomial r(ctx_);
  const Zp& F = ctx_->field;
  size_t i = 0, j = 0;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = compare(ctx_->order, terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      uint32_t s = F.add(terms_[i].coeff, g.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{s, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Polynomial::sub(const Polynomial& g) const { return add(g.negate()); }

Polynomial Polynomial::negate() const {
  Polynomial r = *this;
  const Zp& F = ctx_->field;
  for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

Polynomial Polynomial::mul(const Polynomial& g) const {
  require_same_ring(*ctx_, *g.ctx_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  const Zp& F = ctx_->field;
  for (const Term& a : terms_) {
    for (const Term& b : g.terms_) {
      acc.push_back(Term{F.mul(a.coeff, b.coeff), a.mono.mul(b.mono)});
    }
  }
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::scale(uint32_t c) const {
  const Zp& F = ctx_->field;
  uint32_t r = c % F.p();
  if (r == 0) return zero(ctx_);
  Polynomial f = *this;
  for (Term& t : f.terms_) t.coeff = F.mul(t.coeff, r);
  return f;
}

// multiplication by a single term preserves the term order, so no re-sort
Polynomial Polynomial::mul_term(uint32_t c, const Monomial& m) const {
  const Zp& F = ctx_->field;
  uint32_t r = c % F.p();
  if (r == 0) return zero(ctx_);
  Polynomial f(ctx_);
  f.terms_.reserve(terms_.size());
  for (const Term& t : terms_) f.terms_.push_back(Term{F.mul(t.coeff, r), t.mono.mul(m)});
  return f;
}

Polynomial Polynomial::monic() const {
  return scale(ctx_->field.inv(lead_term().coeff));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(*a.ctx_, *b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

DegreeCheck is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return DegreeCheck{true, std::nullopt};
  int d = f.terms().front().mono.degree();
  for (const Term& t : f.terms()) {
    if (t.mono.degree() != d) return DegreeCheck{false, std::nullopt};
  }
  return DegreeCheck{true, d};
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f.add(g); }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f.mul(g); }

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  int64_t integer() {
    skip_ws();
    size_t start = pos;
    int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (int64_t{1} << 60)) throw ParseError("integer literal too large", start);
      ++pos;
    }
    if (pos == start) fail("expected an integer");
    return v;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ctx) {
  Cursor cur{text};
  std::vector<Term> terms;
  const Zp& F = ctx->field;

  bool negative = false;
  if (cur.peek() == '+' || cur.peek() == '-') {
    negative = cur.s[cur.pos] == '-';
    ++cur.pos;
  }
  while (true) {
    // one term: [integer] ('*'? var)*
    uint32_t coeff = 1;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = F.from_int(cur.integer());
      saw_anything = true;
    }
    std::vector<int> exps(static_cast<size_t>(ctx->num_vars), 0);
    while (true) {
      char c = cur.peek();
      size_t mark = cur.pos;
      if (c == '*') {
        ++cur.pos;
        c = cur.peek();
        if (c != 'x') cur.fail("expected a variable after '*'");
      }
      if (c != 'x') {
        cur.pos = mark;
        break;
      }
      ++cur.pos;
      size_t idx_start = cur.pos;
      int64_t idx = cur.integer();
      if (idx >= ctx->num_vars) throw ParseError("variable index out of range", idx_start);
      int64_t e = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        e = cur.integer();
        if (e > 1'000'000) cur.fail("exponent too large");
      }
      exps[static_cast<size_t>(idx)] += static_cast<int>(e);
      saw_anything = true;
    }
    if (!saw_anything) cur.fail("expected a term");
    uint32_t c = negative ? F.neg(coeff) : coeff;
    if (c != 0) terms.push_back(Term{c, Monomial(std::move(exps))});

    if (cur.done()) break;
    char op = cur.peek();
    if (op != '+' && op != '-') cur.fail("expected '+' or '-' between terms");
    negative = op == '-';
    ++cur.pos;
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Zp& F = f.context()->field;
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    // balanced representative: residues above p/2 print subtracted
    bool neg = t.coeff > F.p() / 2;
    uint32_t mag = neg ? F.p() - t.coeff : t.coeff;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool need_coeff = mag != 1 || t.mono.is_one();
    if (need_coeff) out << mag;
    bool need_star = need_coeff;
    for (int i = 0; i < t.mono.num_vars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (need_star) out << '*';
      out << 'x' << i;
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

namespace {

void enumerate_monomials(int nvars, int degree, std::vector<int>& partial, std::vector<Monomial>& out) {
  if (static_cast<int>(partial.size()) == nvars - 1) {
    partial.push_back(degree);
    out.push_back(Monomial(partial));
    partial.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    partial.push_back(e);
    enumerate_monomials(nvars, degree - e, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int num_vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || num_vars < 1) return out;
  out.reserve(static_cast<size_t>(monomial_count(num_vars, degree)));
  std::vector<int> partial;
  enumerate_monomials(num_vars, degree, partial, out);
  return out;
}

}  // namespace cmreg
