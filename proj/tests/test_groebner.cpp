#include "doctest.h"

#include <random>
#include <vector>

#include "cmreg/groebner.hpp"
#include "cmreg/ring.hpp"
#include "testutil.hpp"

using namespace cmreg;

namespace {

Polynomial pp(const RingPtr& ctx, const std::string& s) { return parse_polynomial(s, ctx); }

// Canonical form invariants: monic, sorted by decreasing lead, no lead term
// divides another, no tail term reducible by another element's lead.
void check_canonical(const GroebnerBasis& gb) {
  const auto& es = gb.elements;
  for (size_t i = 0; i < es.size(); ++i) {
    REQUIRE(!es[i].is_zero());
    CHECK(es[i].lead().coeff == 1);
    for (size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      const ModTerm& li = es[i].lead();
      const ModTerm& lj = es[j].lead();
      if (li.component == lj.component) CHECK(!lj.mono.divides(li.mono));
      for (size_t t = 1; t < es[i].terms().size(); ++t) {
        const ModTerm& tail = es[i].terms()[t];
        if (tail.component == lj.component) CHECK(!lj.mono.divides(tail.mono));
      }
    }
  }
  for (size_t i = 0; i + 1 < es.size(); ++i) {
    CHECK(gb.module->order->compare(es[i].lead(), es[i + 1].lead()) > 0);
  }
}

// Every S-pair of a Groebner basis must reduce to zero.
void check_spairs_reduce(const GroebnerBasis& gb) {
  const auto& es = gb.elements;
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      const ModTerm& li = es[i].lead();
      const ModTerm& lj = es[j].lead();
      if (li.component != lj.component) continue;
      Monomial l = Monomial::lcm(li.mono, lj.mono);
      const Zp& F = gb.module->ctx->field;
      FreeModuleElement s = es[i]
                                .mul_term(F.inv(li.coeff), l.div(li.mono))
                                .sub(es[j].mul_term(F.inv(lj.coeff), l.div(lj.mono)));
      CHECK(normal_form(s, gb).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("division with quotient tracking") {
  RingPtr ctx = make_ring(2, 32003);
  std::vector<FreeModuleElement> divs{
      FreeModuleElement::from_polynomial(pp(ctx, "x0^2")),
      FreeModuleElement::from_polynomial(pp(ctx, "x0*x1 + x1^2"))};

  DivisionResult d = divide(FreeModuleElement::from_polynomial(pp(ctx, "x0^2*x1")), divs);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotients[0] == pp(ctx, "x1"));

  // x0*x1^2 + x1^3 = x1 * (x0*x1 + x1^2)
  d = divide(FreeModuleElement::from_polynomial(pp(ctx, "x0*x1^2 + x1^3")), divs);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotients[1] == pp(ctx, "x1"));

  // lead not reducible: passes through untouched
  d = divide(FreeModuleElement::from_polynomial(pp(ctx, "x1^3")), divs);
  CHECK(d.remainder.to_polynomial() == pp(ctx, "x1^3"));

  // f = sum q_k g_k + r identity on a random instance
  std::mt19937_64 rng(901);
  for (int iter = 0; iter < 50; ++iter) {
    Polynomial f = testutil::random_form(ctx, 3, rng);
    DivisionResult r = divide(FreeModuleElement::from_polynomial(f), divs);
    Polynomial rebuilt = r.remainder.is_zero() ? Polynomial::zero(ctx) : r.remainder.to_polynomial();
    rebuilt = rebuilt.add(r.quotients[0].mul(pp(ctx, "x0^2")));
    rebuilt = rebuilt.add(r.quotients[1].mul(pp(ctx, "x0*x1 + x1^2")));
    CHECK(rebuilt == f);
  }
}

TEST_CASE("buchberger on a pinned two-generator ideal") {
  RingPtr ctx = make_ring(2, 32003);
  GroebnerBasis gb = buchberger({pp(ctx, "x0^2"), pp(ctx, "x0*x1 + x1^2")});
  REQUIRE(gb.elements.size() == 3);
  check_canonical(gb);
  // descending lead order; the degree-3 element sorts first under grevlex
  CHECK(gb.elements[0].to_polynomial() == pp(ctx, "x1^3"));
  CHECK(gb.elements[1].to_polynomial() == pp(ctx, "x0^2"));
  CHECK(gb.elements[2].to_polynomial() == pp(ctx, "x0*x1 + x1^2"));
  check_spairs_reduce(gb);
}

TEST_CASE("twisted cubic generators are already a basis") {
  RingPtr ctx = make_ring(4, 32003);
  std::vector<Polynomial> gens{pp(ctx, "x1^2 - x0*x2"), pp(ctx, "x1*x2 - x0*x3"),
                               pp(ctx, "x2^2 - x1*x3")};
  GroebnerBasis gb = buchberger(gens);
  REQUIRE(gb.elements.size() == 3);
  check_canonical(gb);
  // leads under graded reverse lex: x1^2, x1*x2, x2^2
  CHECK(gb.elements[0].lead().mono == pp(ctx, "x1^2").lead_term().mono);
  CHECK(gb.elements[1].lead().mono == pp(ctx, "x1*x2").lead_term().mono);
  CHECK(gb.elements[2].lead().mono == pp(ctx, "x2^2").lead_term().mono);
  for (const Polynomial& g : gens) CHECK(normal_form(g, gb).is_zero());
  check_spairs_reduce(gb);
}

TEST_CASE("normal form is idempotent and linear over the ideal") {
  RingPtr ctx = make_ring(3, 32003);
  GroebnerBasis gb = buchberger({pp(ctx, "x0*x1 - x2^2"), pp(ctx, "x0^2 + x1*x2")});
  std::mt19937_64 rng(902);
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial f = testutil::random_form(ctx, 4, rng);
    Polynomial nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(f.sub(nf), gb).is_zero());
  }
}

TEST_CASE("buchberger input validation") {
  RingPtr ctx = make_ring(2, 32003);
  CHECK_THROWS_AS(buchberger({}), Error);
  CHECK_THROWS_AS(buchberger({Polynomial::zero(ctx)}), Error);
  CHECK_THROWS_AS(buchberger({pp(ctx, "x0^2 + x1")}), Error);
  // the general variant accepts mixed degrees
  GroebnerBasis gb = buchberger_general({pp(ctx, "x0 - 1")});
  CHECK(normal_form(pp(ctx, "x0^2 - 1"), gb).is_zero());
  CHECK(!normal_form(pp(ctx, "x1"), gb).is_zero());
}

TEST_CASE("random bases satisfy the Groebner property") {
  RingPtr ctx = make_ring(3, 101);
  std::mt19937_64 rng(903);
  for (int iter = 0; iter < 12; ++iter) {
    std::vector<Polynomial> gens;
    int ngens = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < ngens; ++k) {
      Polynomial f = testutil::random_sparse_form(ctx, 2 + static_cast<int>(rng() % 2), 3, rng);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(gens);
    check_canonical(gb);
    check_spairs_reduce(gb);
    for (const Polynomial& g : gens) CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("koszul syzygy of two variables") {
  RingPtr ctx = make_ring(2, 32003);
  GroebnerBasis gb = buchberger({pp(ctx, "x0"), pp(ctx, "x1")});
  REQUIRE(gb.elements.size() == 2);
  std::vector<FreeModuleElement> syz = syzygy_basis(gb);
  REQUIRE(syz.size() == 1);
  // x1*g0 - x0*g1 with g0 = x0, g1 = x1 (component 0 holds the larger lead)
  std::vector<Polynomial> comps = syz[0].components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == pp(ctx, "x1"));
  CHECK(comps[1] == pp(ctx, "-x0"));
  CHECK(syz[0].homogeneous_degree() == std::optional<int>(2));
}

TEST_CASE("principal ideals have no syzygies") {
  RingPtr ctx = make_ring(3, 32003);
  GroebnerBasis gb = buchberger({pp(ctx, "x0^2 - x1*x2")});
  CHECK(syzygy_basis(gb).empty());
}

TEST_CASE("syzygies annihilate the basis") {
  RingPtr ctx = make_ring(3, 32003);
  std::mt19937_64 rng(904);
  for (int iter = 0; iter < 8; ++iter) {
    std::vector<Polynomial> gens{testutil::random_sparse_form(ctx, 2, 3, rng),
                                 testutil::random_sparse_form(ctx, 2, 3, rng),
                                 testutil::random_sparse_form(ctx, 3, 3, rng)};
    std::vector<Polynomial> nz;
    for (auto& g : gens)
      if (!g.is_zero()) nz.push_back(g);
    if (nz.size() < 2) continue;
    GroebnerBasis gb = buchberger(nz);
    std::vector<FreeModuleElement> syz = syzygy_basis(gb);
    for (const FreeModuleElement& s : syz) {
      REQUIRE(!s.is_zero());
      CHECK(s.is_homogeneous());
      std::vector<Polynomial> comps = s.components();
      Polynomial total = Polynomial::zero(ctx);
      for (size_t k = 0; k < comps.size(); ++k) {
        total = total.add(comps[k].mul(gb.elements[k].to_polynomial()));
      }
      CHECK(total.is_zero());
    }
  }
}

TEST_CASE("syzygy basis rejects non-bases") {
  RingPtr ctx = make_ring(2, 32003);
  // {x0^2, x0*x1 + x1^2} is not a Groebner basis: its S-pair leaves x1^3
  FreeModulePtr mod = ring_module(ctx);
  GroebnerBasis fake{mod,
                     {FreeModuleElement::from_polynomial(pp(ctx, "x0^2")),
                      FreeModuleElement::from_polynomial(pp(ctx, "x0*x1 + x1^2"))}};
  CHECK_THROWS_AS(syzygy_basis(fake), Error);
}
