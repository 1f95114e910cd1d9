#include "doctest.h"

#include <random>

#include "cmreg/gf.hpp"
#include "cmreg/ring.hpp"
#include "testutil.hpp"

using namespace cmreg;

namespace {

RingPtr P2() { return make_ring(3, 32003); }

Polynomial pp(const RingPtr& ctx, const std::string& s) { return parse_polynomial(s, ctx); }

}  // namespace

TEST_CASE("field arithmetic basics") {
  Zp F(32003);
  CHECK(F.add(32000, 5) == 2);
  CHECK(F.sub(3, 5) == 32001);
  CHECK(F.mul(F.inv(7), 7) == 1);
  CHECK(F.from_int(-1) == 32002);
  CHECK(F.from_int(32003) == 0);
  for (uint32_t a = 1; a < 200; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(Zp(32004), Error);
  CHECK_THROWS_AS(F.inv(0), Error);
}

TEST_CASE("binomials and monomial counts") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(4, 0) == 1);
  CHECK(monomial_count(2, -1) == 0);
  CHECK(static_cast<int64_t>(monomials_of_degree(3, 2).size()) == monomial_count(3, 2));
}

TEST_CASE("matrix rank and kernel over GF(p)") {
  Zp F(101);
  ZpMatrix m(F, 3, 4);
  // rows: (1,2,3,4), (2,4,6,8), (0,1,1,0) -> rank 2
  uint32_t rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
  CHECK(m.rank() == 2);
  auto ker = m.kernel_basis();
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    for (size_t r = 0; r < 3; ++r) {
      uint64_t acc = 0;
      for (size_t c = 0; c < 4; ++c) acc += static_cast<uint64_t>(rows[r][c]) * v[c];
      CHECK(acc % 101 == 0);
    }
  }
}

TEST_CASE("parse examples") {
  auto ctx = P2();
  // "x0^2*x1 + 2*x1^3" has two terms of degree 3
  auto f = pp(ctx, "x0^2*x1 + 2*x1^3");
  CHECK(f.terms().size() == 2);
  CHECK(is_homogeneous(f).homogeneous);
  CHECK(is_homogeneous(f).degree == 3);

  // whitespace-insensitive, '*' optional
  CHECK(pp(ctx, "x0 ^2* x1+ 2 x1^3") == f);

  // "x0 - x0" collapses to zero; "0" parses to zero
  CHECK(pp(ctx, "x0 - x0").is_zero());
  CHECK(pp(ctx, "0").is_zero());
  CHECK(pp(ctx, "x0 - x0") == pp(ctx, "0"));

  // integers reduce mod p
  CHECK(pp(ctx, "32004*x0") == pp(ctx, "x0"));
  CHECK(pp(ctx, "-x0") == pp(ctx, "32002*x0"));

  // errors carry positions
  CHECK_THROWS_AS(pp(ctx, "x9"), ParseError);
  CHECK_THROWS_AS(pp(ctx, "x0 + + x1"), ParseError);
  CHECK_THROWS_AS(pp(ctx, "x0 * * x1"), ParseError);
  CHECK_THROWS_AS(pp(ctx, "y0"), ParseError);
  CHECK_THROWS_AS(pp(ctx, ""), ParseError);
  try {
    pp(ctx, "x0 + x9^2");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("multiplication collapses cross terms in characteristic 2") {
  auto ctx = make_ring(2, 2);
  auto f = pp(ctx, "x0 + x1");
  auto g = f.mul(f);
  CHECK(g == pp(ctx, "x0^2 + x1^2"));
}

TEST_CASE("product of conjugate linear forms") {
  auto ctx = P2();
  auto prod = pp(ctx, "x0 + x1").mul(pp(ctx, "x0 - x1"));
  CHECK(prod == pp(ctx, "x0^2 - x1^2"));
}

TEST_CASE("grevlex order on reference pairs") {
  MonomialOrder grevlex{};
  // degree dominates
  CHECK(compare(grevlex, Monomial({2, 0, 0}), Monomial({1, 1, 0})) > 0);
  // equal degree: smaller exponent at the last differing variable wins
  CHECK(compare(grevlex, Monomial({1, 2, 0}), Monomial({2, 0, 1})) > 0);   // x0*x1^2 > x0^2*x2
  CHECK(compare(grevlex, Monomial({0, 2, 0, 0}), Monomial({1, 0, 1, 0})) > 0);  // x1^2 > x0*x2
  CHECK(compare(grevlex, Monomial({1, 1, 0}), Monomial({1, 1, 0})) == 0);
}

TEST_CASE("lex order") {
  MonomialOrder lex{OrderKind::lex, 0};
  CHECK(compare(lex, Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
  CHECK(compare(lex, Monomial({1, 2, 0}), Monomial({1, 1, 9})) > 0);
}

TEST_CASE("elimination order makes the leading block dominant") {
  MonomialOrder elim{OrderKind::elimination, 1};
  // any positive power of x0 beats anything without x0
  CHECK(compare(elim, Monomial({1, 0, 0}), Monomial({0, 9, 9})) > 0);
  // ties on the block fall through to grevlex on the rest
  CHECK(compare(elim, Monomial({1, 2, 0}), Monomial({1, 0, 1})) > 0);
}

TEST_CASE("monomial order axioms hold on random triples") {
  std::mt19937_64 rng(801);
  for (MonomialOrder ord : {MonomialOrder{OrderKind::grevlex, 0}, MonomialOrder{OrderKind::lex, 0},
                            MonomialOrder{OrderKind::elimination, 2}}) {
    for (int iter = 0; iter < 400; ++iter) {
      auto a = testutil::random_monomial(4, static_cast<int>(rng() % 5), rng);
      auto b = testutil::random_monomial(4, static_cast<int>(rng() % 5), rng);
      auto c = testutil::random_monomial(4, static_cast<int>(rng() % 5), rng);
      // totality and antisymmetry
      CHECK(compare(ord, a, b) == -compare(ord, b, a));
      CHECK((compare(ord, a, b) == 0) == (a == b));
      // transitivity
      if (compare(ord, a, b) >= 0 && compare(ord, b, c) >= 0) CHECK(compare(ord, a, c) >= 0);
      // multiplicativity and 1-minimality on monomials
      if (compare(ord, a, b) > 0) CHECK(compare(ord, a.mul(c), b.mul(c)) > 0);
      CHECK(compare(ord, a.mul(b), a) >= 0);
    }
  }
}

TEST_CASE("ring arithmetic matches reference arithmetic on random inputs") {
  std::mt19937_64 rng(802);
  for (uint32_t p : {32003u, 101u, 2u}) {
    auto ctx = make_ring(3, p);
    for (int iter = 0; iter < 60; ++iter) {
      auto f = testutil::random_sparse_form(ctx, 1 + static_cast<int>(rng() % 3), 4, rng);
      auto g = testutil::random_sparse_form(ctx, 1 + static_cast<int>(rng() % 3), 4, rng);
      auto h = testutil::random_sparse_form(ctx, 1 + static_cast<int>(rng() % 3), 4, rng);
      CHECK(testutil::ref_equal(testutil::ref_mul(testutil::ref_from(f), testutil::ref_from(g), p),
                                f.mul(g), p));
      CHECK(f.add(g) == g.add(f));
      CHECK(f.mul(g) == g.mul(f));
      CHECK(f.mul(g.add(h)) == f.mul(g).add(f.mul(h)));
      CHECK(f.sub(f).is_zero());
    }
  }
}

TEST_CASE("canonical form: parse after format is the identity") {
  std::mt19937_64 rng(803);
  for (uint32_t p : {32003u, 2u}) {
    auto ctx = make_ring(4, p);
    for (int iter = 0; iter < 80; ++iter) {
      auto f = testutil::random_sparse_form(ctx, static_cast<int>(rng() % 4), 5, rng);
      CHECK(parse_polynomial(format_polynomial(f), ctx) == f);
    }
    CHECK(format_polynomial(Polynomial::zero(ctx)) == "0");
  }
}

TEST_CASE("homogeneity reporting") {
  auto ctx = P2();
  CHECK_FALSE(is_homogeneous(pp(ctx, "x0 + x1^2")).homogeneous);
  auto z = is_homogeneous(pp(ctx, "0"));
  CHECK(z.homogeneous);
  CHECK_FALSE(z.degree.has_value());
  CHECK(is_homogeneous(pp(ctx, "5")).degree == 0);
}

TEST_CASE("context mismatch is detected") {
  auto a = make_ring(3, 32003);
  auto b = make_ring(4, 32003);
  auto c = make_ring(3, 101);
  CHECK_THROWS_AS(pp(a, "x0").add(pp(b, "x0")), ContextMismatchError);
  CHECK_THROWS_AS(pp(a, "x0").mul(pp(c, "x0")), ContextMismatchError);
  // equal-valued contexts are interchangeable even as distinct objects
  auto a2 = make_ring(3, 32003);
  CHECK(pp(a, "x0").add(pp(a2, "x1")) == pp(a, "x0 + x1"));
}

TEST_CASE("ring construction validation") {
  CHECK_THROWS_AS(make_ring(0, 32003), Error);
  CHECK_THROWS_AS(make_ring(3, 32004), Error);
  CHECK_THROWS_AS(make_ring(3, 32003, MonomialOrder{OrderKind::elimination, 0}), Error);
  CHECK_THROWS_AS(make_ring(3, 32003, MonomialOrder{OrderKind::elimination, 3}), Error);
}
