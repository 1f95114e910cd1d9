#include "doctest.h"

#include <string>
#include <vector>

#include "cmreg/arrangements.hpp"
#include "cmreg/cohomology.hpp"
#include "cmreg/resolution.hpp"
#include "testutil.hpp"

using namespace cmreg;

namespace {

Polynomial pp(const RingPtr& ctx, const std::string& s) { return parse_polynomial(s, ctx); }

Ideal ideal_of(const RingPtr& ctx, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(pp(ctx, s));
  return Ideal(ctx, std::move(ps));
}

uint32_t eval_monomial(const Zp& field, const Monomial& m, const std::vector<uint32_t>& pt) {
  uint32_t acc = 1;
  for (int v = 0; v < m.num_vars(); ++v)
    for (int k = 0; k < m.exponent(v); ++k) acc = field.mul(acc, pt[static_cast<size_t>(v)]);
  return acc;
}

}  // namespace

TEST_CASE("subspace forms are canonicalized by row reduction") {
  RingPtr ctx = make_ring(3, 32003);
  LinearSubspace s(ctx, {pp(ctx, "x0 + x1"), pp(ctx, "x0 - x1")});
  REQUIRE(s.codim() == 2);
  CHECK(s.dim() == 0);
  CHECK(s.forms()[0] == pp(ctx, "x0"));
  CHECK(s.forms()[1] == pp(ctx, "x1"));
  CHECK(equal_ideals(s.ideal(), ideal_of(ctx, {"x0", "x1"})));
  CHECK(s.ideal().saturated_hint() == std::optional<bool>(true));

  RingPtr ctx4 = make_ring(4, 32003);
  CHECK(LinearSubspace(ctx4, {pp(ctx4, "x0")}).dim() == 2);
}

TEST_CASE("subspace validation") {
  RingPtr ctx = make_ring(3, 32003);
  CHECK_THROWS_AS(LinearSubspace(ctx, {pp(ctx, "x0 + x1"), pp(ctx, "x0 + x1")}), Error);
  CHECK_THROWS_AS(LinearSubspace(ctx, {pp(ctx, "x0^2")}), Error);
  CHECK_THROWS_AS(LinearSubspace(ctx, {}), Error);
  CHECK_THROWS_AS(LinearSubspace(ctx, {pp(ctx, "x0"), pp(ctx, "x1"), pp(ctx, "x2")}), Error);
}

TEST_CASE("subspace ideals are 1-regular both ways") {
  RingPtr ctx = make_ring(4, 32003);
  for (uint64_t seed : {11u, 12u, 13u}) {
    LinearSubspace s = random_subspace(ctx, 1, seed);
    CHECK(regularity_betti(s.ideal()) == 1);
    CHECK(sheaf_regularity(s.ideal()) == 1);
  }
}

TEST_CASE("random subspaces are deterministic and generically positioned") {
  RingPtr ctx = make_ring(4, 32003);
  LinearSubspace a = random_subspace(ctx, 1, 77);
  LinearSubspace b = random_subspace(ctx, 1, 77);
  REQUIRE(a.forms().size() == b.forms().size());
  for (size_t k = 0; k < a.forms().size(); ++k) CHECK(a.forms()[k] == b.forms()[k]);

  // two random lines in P^3 miss each other: dim(I+J) counts 1+1-3
  LinearSubspace c = random_subspace(ctx, 1, 78);
  CHECK(krull_dim(sum(a.ideal(), c.ideal())) - 1 == -1);

  CHECK_THROWS_AS(random_subspace(ctx, 3, 1), Error);
  CHECK_THROWS_AS(random_subspace(ctx, -1, 1), Error);
}

TEST_CASE("arrangement ideals") {
  RingPtr ctx = make_ring(3, 32003);
  LinearSubspace p1(ctx, {pp(ctx, "x1"), pp(ctx, "x2")});
  LinearSubspace p2(ctx, {pp(ctx, "x0"), pp(ctx, "x2")});
  CHECK(equal_ideals(arrangement_ideal({p1}), p1.ideal()));
  Ideal two_points = arrangement_ideal({p1, p2});
  CHECK(equal_ideals(two_points, ideal_of(ctx, {"x2", "x0*x1"})));
  CHECK(two_points.saturated_hint() == std::optional<bool>(true));

  RingPtr ctx4 = make_ring(4, 32003);
  LinearSubspace l1(ctx4, {pp(ctx4, "x0"), pp(ctx4, "x1")});
  LinearSubspace l2(ctx4, {pp(ctx4, "x2"), pp(ctx4, "x3")});
  Ideal lines = arrangement_ideal({l1, l2});
  CHECK(equal_ideals(lines, ideal_of(ctx4, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"})));

  Arrangement arr({l1, l2});
  CHECK(equal_ideals(arr.ideal, lines));
}

TEST_CASE("pairwise intersection dimensions") {
  RingPtr ctx4 = make_ring(4, 32003);
  LinearSubspace l1(ctx4, {pp(ctx4, "x0"), pp(ctx4, "x1")});
  LinearSubspace l2(ctx4, {pp(ctx4, "x2"), pp(ctx4, "x3")});
  auto dims = pairwise_intersection_dims({l1, l2});
  CHECK(dims[0][0] == 1);
  CHECK(dims[1][1] == 1);
  CHECK(dims[0][1] == -1);
  CHECK(dims[1][0] == -1);

  // hyperplanes meet in codimension two
  LinearSubspace h1(ctx4, {pp(ctx4, "x0")});
  LinearSubspace h2(ctx4, {pp(ctx4, "x1")});
  CHECK(pairwise_intersection_dims({h1, h2})[0][1] == 1);

  // generic 2-planes: empty meet in P^5, a point in P^4
  RingPtr ctx6 = make_ring(6, 32003);
  auto d5 = pairwise_intersection_dims(
      {random_subspace(ctx6, 2, 21), random_subspace(ctx6, 2, 22)});
  CHECK(d5[0][1] == -1);
  RingPtr ctx5 = make_ring(5, 32003);
  auto d4 = pairwise_intersection_dims(
      {random_subspace(ctx5, 2, 23), random_subspace(ctx5, 2, 24)});
  CHECK(d4[0][1] == 0);
}

TEST_CASE("cones reuse generators in a larger ring") {
  RingPtr ctx = make_ring(3, 32003);
  Ideal point = ideal_of(ctx, {"x1", "x2"});
  Ideal line = cone_ideal(point, 1);
  RingPtr ctx4 = line.context();
  CHECK(ctx4->num_vars == 4);
  CHECK(equal_ideals(line, ideal_of(ctx4, {"x1", "x2"})));

  CHECK(cone_ideal(Ideal::unit(ctx), 2).is_unit());
  CHECK_THROWS_AS(cone_ideal(point, 0), Error);

  Ideal pair = ideal_of(ctx, {"x2", "x0*x1"});
  Ideal cone2 = cone_ideal(pair, 2);
  CHECK(cone2.context()->num_vars == 5);
  CHECK(sheaf_regularity(cone2) == 2);
}

TEST_CASE("point ideals from coordinates") {
  RingPtr ctx = make_ring(3, 32003);
  Ideal one = points_ideal(ctx, {{1, 0, 0}});
  CHECK(equal_ideals(one, ideal_of(ctx, {"x1", "x2"})));
  Ideal two = points_ideal(ctx, {{1, 0, 0}, {0, 1, 0}});
  CHECK(equal_ideals(two, ideal_of(ctx, {"x2", "x0*x1"})));

  CHECK_THROWS_AS(points_ideal(ctx, {{1, 0, 0}, {2, 0, 0}}), Error);
  CHECK_THROWS_AS(points_ideal(ctx, {{0, 0, 0}}), Error);
  CHECK_THROWS_AS(points_ideal(ctx, {{1, 0}}), Error);
  CHECK_THROWS_AS(points_ideal(ctx, {}), Error);
}

TEST_CASE("random point sets match the evaluation-matrix rank oracle") {
  RingPtr ctx = make_ring(3, 32003);
  std::mt19937_64 rng(909);
  for (size_t npts : {3u, 5u}) {
    std::vector<std::vector<uint32_t>> pts;
    while (pts.size() < npts) {
      std::vector<uint32_t> pt{static_cast<uint32_t>(rng() % 32003),
                               static_cast<uint32_t>(rng() % 32003),
                               static_cast<uint32_t>(rng() % 32003)};
      if (pt[0] == 0 && pt[1] == 0 && pt[2] == 0) continue;
      pts.push_back(pt);
    }
    Ideal i = points_ideal(ctx, pts);
    for (int d = 1; d <= 4; ++d) {
      const auto monos = monomials_of_degree(3, d);
      ZpMatrix ev(ctx->field, npts, monos.size());
      for (size_t r = 0; r < npts; ++r)
        for (size_t c = 0; c < monos.size(); ++c)
          ev.at(r, c) = eval_monomial(ctx->field, monos[c], pts[r]);
      int64_t expected = monomial_count(3, d) - static_cast<int64_t>(ev.rank());
      CHECK(hilbert_function(i, d) == expected);
    }
    // generic points in the plane are (#points)-regular at worst
    CHECK(sheaf_regularity(i) <= static_cast<int>(npts));
  }
}
