#include "cmreg/arrangements.hpp"

#include <random>

namespace cmreg {

namespace {

Polynomial linear_form(const RingPtr& ctx, const std::vector<uint32_t>& coeffs) {
  std::vector<Term> terms;
  for (int v = 0; v < ctx->num_vars; ++v) {
    if (coeffs[static_cast<size_t>(v)] == 0) continue;
    std::vector<int> e(static_cast<size_t>(ctx->num_vars), 0);
    e[static_cast<size_t>(v)] = 1;
    terms.push_back(Term{coeffs[static_cast<size_t>(v)], Monomial(std::move(e))});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

LinearSubspace::LinearSubspace(RingPtr ctx, std::vector<Polynomial> forms) : ctx_(std::move(ctx)) {
  if (forms.empty()) throw Error("a subspace needs at least one defining form");
  const int nv = ctx_->num_vars;
  for (const Polynomial& f : forms) {
    require_same_ring(*f.context(), *ctx_);
    if (f.is_zero() || f.degree() != 1 || !is_homogeneous(f).homogeneous)
      throw Error("subspace forms must be nonzero linear");
  }
  ZpMatrix m(ctx_->field, forms.size(), static_cast<size_t>(nv));
  for (size_t r = 0; r < forms.size(); ++r)
    for (const Term& t : forms[r].terms()) {
      int v = 0;
      while (t.mono.exponent(v) == 0) ++v;
      m.at(r, static_cast<size_t>(v)) = t.coeff;
    }
  m.row_reduce();
  for (size_t r = 0; r < forms.size(); ++r) {
    std::vector<uint32_t> row(static_cast<size_t>(nv));
    bool zero = true;
    for (int v = 0; v < nv; ++v) {
      row[static_cast<size_t>(v)] = m.at(r, static_cast<size_t>(v));
      zero = zero && row[static_cast<size_t>(v)] == 0;
    }
    if (zero) throw Error("dependent subspace forms");
    forms_.push_back(linear_form(ctx_, row));
  }
  if (codim() >= nv) throw Error("the forms cut out the empty subspace");
}

Ideal LinearSubspace::ideal() const {
  Ideal i(ctx_, forms_);
  i.set_saturated_hint(true);  // prime, in particular saturated
  return i;
}

LinearSubspace random_subspace(const RingPtr& ctx, int dim, uint64_t seed) {
  const int nv = ctx->num_vars;
  if (dim < 0 || dim >= nv - 1) throw Error("subspace dimension out of range");
  const int codim = nv - 1 - dim;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    ZpMatrix m(ctx->field, static_cast<size_t>(codim), static_cast<size_t>(nv));
    for (size_t r = 0; r < static_cast<size_t>(codim); ++r)
      for (size_t c = 0; c < static_cast<size_t>(nv); ++c)
        m.at(r, c) = static_cast<uint32_t>(rng() % ctx->field.p());
    if (m.rank() != static_cast<size_t>(codim)) continue;
    std::vector<Polynomial> forms;
    for (size_t r = 0; r < static_cast<size_t>(codim); ++r) {
      std::vector<uint32_t> row(static_cast<size_t>(nv));
      for (size_t c = 0; c < static_cast<size_t>(nv); ++c) row[c] = m.at(r, c);
      forms.push_back(linear_form(ctx, row));
    }
    return LinearSubspace(ctx, std::move(forms));
  }
  throw Error("random subspace generation kept drawing dependent forms");
}

Ideal arrangement_ideal(const std::vector<LinearSubspace>& subspaces) {
  if (subspaces.empty()) throw Error("empty arrangement");
  for (const LinearSubspace& s : subspaces)
    require_same_ring(*s.context(), *subspaces.front().context());
  Ideal acc = subspaces.front().ideal();
  for (size_t k = 1; k < subspaces.size(); ++k) acc = intersect(acc, subspaces[k].ideal());
  for (const Polynomial& g : acc.generators())
    for (const LinearSubspace& s : subspaces)
      if (!s.ideal().contains(g)) throw InternalError("arrangement generator misses a member");
  acc.set_saturated_hint(true);
  return acc;
}

std::vector<std::vector<int>> pairwise_intersection_dims(
    const std::vector<LinearSubspace>& subspaces) {
  for (const LinearSubspace& s : subspaces)
    require_same_ring(*s.context(), *subspaces.front().context());
  const size_t d = subspaces.size();
  std::vector<std::vector<int>> out(d, std::vector<int>(d, 0));
  for (size_t i = 0; i < d; ++i) {
    out[i][i] = subspaces[i].dim();
    for (size_t j = i + 1; j < d; ++j) {
      int dim = krull_dim(sum(subspaces[i].ideal(), subspaces[j].ideal())) - 1;
      out[i][j] = dim;
      out[j][i] = dim;
    }
  }
  return out;
}

Ideal cone_ideal(const Ideal& ideal, int extra_vars) {
  if (extra_vars < 1) throw Error("a cone needs at least one new variable");
  const RingPtr& ctx = ideal.context();
  RingPtr ext = make_ring(ctx->num_vars + extra_vars, ctx->field.p(), ctx->order);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : ideal.generators()) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      std::vector<int> e = t.mono.exponents();
      e.resize(static_cast<size_t>(ext->num_vars), 0);
      terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    gens.push_back(Polynomial::from_terms(ext, std::move(terms)));
  }
  Ideal out(ext, std::move(gens));
  if (ideal.saturated_hint().value_or(false)) out.set_saturated_hint(true);
  return out;
}

Ideal points_ideal(const RingPtr& ctx, const std::vector<std::vector<uint32_t>>& points) {
  const size_t nv = static_cast<size_t>(ctx->num_vars);
  if (points.empty()) throw Error("empty point list");
  for (const auto& pt : points) {
    if (pt.size() != nv) throw Error("point has the wrong number of coordinates");
    bool zero = true;
    for (uint32_t c : pt) zero = zero && ctx->field.from_int(c) == 0;
    if (zero) throw Error("zero vector is not a projective point");
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      ZpMatrix pair(ctx->field, 2, nv);
      for (size_t c = 0; c < nv; ++c) {
        pair.at(0, c) = ctx->field.from_int(points[i][c]);
        pair.at(1, c) = ctx->field.from_int(points[j][c]);
      }
      if (pair.rank() < 2) throw Error("repeated point");
    }

  std::vector<LinearSubspace> subs;
  for (const auto& pt : points) {
    ZpMatrix ev(ctx->field, 1, nv);
    for (size_t c = 0; c < nv; ++c) ev.at(0, c) = ctx->field.from_int(pt[c]);
    std::vector<Polynomial> forms;
    for (const std::vector<uint32_t>& v : ev.kernel_basis()) forms.push_back(linear_form(ctx, v));
    subs.emplace_back(ctx, std::move(forms));
  }
  return arrangement_ideal(subs);
}

LinearSubspace subspace_spanned_by(const RingPtr& ctx,
                                   const std::vector<std::vector<uint32_t>>& points) {
  const size_t nv = static_cast<size_t>(ctx->num_vars);
  if (points.empty()) throw Error("empty point list");
  ZpMatrix ev(ctx->field, points.size(), nv);
  for (size_t r = 0; r < points.size(); ++r) {
    if (points[r].size() != nv) throw Error("point has the wrong number of coordinates");
    for (size_t c = 0; c < nv; ++c) ev.at(r, c) = ctx->field.from_int(points[r][c]);
  }
  if (ev.rank() == 0) throw Error("zero vector is not a projective point");
  std::vector<Polynomial> forms;
  for (const std::vector<uint32_t>& v : ev.kernel_basis()) forms.push_back(linear_form(ctx, v));
  if (forms.empty()) throw Error("the points span the whole space");
  return LinearSubspace(ctx, std::move(forms));
}

}  // namespace cmreg
