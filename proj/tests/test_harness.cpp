#include <algorithm>
#include <set>
#include <string>

#include "cmreg/arrangements.hpp"
#include "cmreg/cohomology.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/harness.hpp"
#include "cmreg/resolution.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace cmreg;

namespace {

const std::string* find_quantity(const TrialRecord& rec, const std::string& key) {
  for (const auto& [k, v] : rec.quantities)
    if (k == key) return &v;
  return nullptr;
}

int quantity_int(const TrialRecord& rec, const std::string& key) {
  const std::string* v = find_quantity(rec, key);
  REQUIRE(v != nullptr);
  return std::stoi(*v);
}

}  // namespace

TEST_CASE("corpus has twelve distinct well-formed entries") {
  auto corpus = corpus_ideals(32003);
  CHECK(corpus.size() == 12);
  std::set<std::string> names;
  for (const auto& e : corpus) names.insert(e.name);
  CHECK(names.size() == 12);

  // spot values that pin the corpus against accidental reshuffles
  auto find = [&](const std::string& name) -> const Ideal& {
    for (const auto& e : corpus)
      if (e.name == name) return e.ideal;
    FAIL("missing corpus entry ", name);
    return corpus[0].ideal;
  };
  CHECK(regularity_betti(find("principal-P2")) == 2);
  CHECK(regularity_betti(find("koszul-P2")) == 1);
  CHECK(regularity_betti(find("twisted-cubic-P3")) == 2);
  CHECK(regularity_betti(find("ci-quadrics-P3")) == 3);
  CHECK(regularity_betti(find("nonsaturated-P1")) == 2);
  CHECK(sheaf_regularity(find("nonsaturated-P1")) == 1);
  CHECK(find("unit-P2").is_unit());
  CHECK(find("disjoint-lines-P3").generators().size() == 4);
  for (int k = 2; k <= 5; ++k) {
    const Ideal& pts = find("points" + std::to_string(k) + "-P2");
    CHECK(krull_dim(pts) == 1);
    CHECK(sheaf_regularity(pts) <= k);
  }
  // same recipe at a different characteristic still builds a valid corpus
  CHECK(corpus_ideals(101).size() == 12);
}

TEST_CASE("campaign results are reproducible bit for bit") {
  CampaignConfig cfg{.campaign = "thm-prod", .trials = 6, .seed = 9, .ambient_n = 2};
  CampaignResult a = run_campaign(cfg);
  CampaignResult b = run_campaign(cfg);
  REQUIRE(a.records.size() == b.records.size());
  CHECK(a.accepted == b.accepted);
  CHECK(a.draws == b.draws);
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].draw_index == b.records[i].draw_index);
    CHECK(a.records[i].verdict == b.records[i].verdict);
    CHECK(a.records[i].description == b.records[i].description);
    CHECK(a.records[i].quantities == b.records[i].quantities);
    CHECK(a.records[i].replay == b.records[i].replay);
  }

  CampaignResult c = run_campaign({.campaign = "thm-prod", .trials = 6, .seed = 10, .ambient_n = 2});
  bool same = true;
  for (size_t i = 0; i < std::min(a.records.size(), c.records.size()); ++i)
    same = same && a.records[i].description == c.records[i].description &&
           a.records[i].quantities == c.records[i].quantities;
  CHECK_FALSE(same);
}

TEST_CASE("product campaign accepts, rejects, and cross-checks as configured") {
  CampaignResult r = run_campaign({.campaign = "thm-prod", .trials = 10, .seed = 1, .ambient_n = 2});
  CHECK(r.ok());
  CHECK(r.accepted == 10);
  CHECK(r.passed == 10);
  CHECK(r.target == 10);

  int xchecks = 0;
  for (const auto& rec : r.records) {
    if (rec.verdict == Verdict::hypothesis_rejected) {
      CHECK(quantity_int(rec, "dim_sum") > 1);
      continue;
    }
    CHECK(quantity_int(rec, "dim_sum") <= 1);
    CHECK(quantity_int(rec, "reg_prod") <= quantity_int(rec, "bound"));
    CHECK(quantity_int(rec, "bound") ==
          quantity_int(rec, "reg_i") + quantity_int(rec, "reg_j"));
    CHECK(rec.replay.find("ring 3 32003\n") == 0);
    CHECK(rec.replay.find("ideal I\n") != std::string::npos);
    CHECK(rec.replay.find("ideal J\n") != std::string::npos);
    if (const std::string* x = find_quantity(rec, "xcheck")) {
      CHECK(*x == "match");
      ++xchecks;
    }
  }
  CHECK(xchecks == 1);  // accepted trials 1..10 carry exactly one tenth-mark

  // a monomial pair sharing a coordinate plane is the canonical rejected draw
  RingPtr p3 = make_ring(4, 32003);
  Ideal a(p3, {parse_polynomial("x0", p3)});
  Ideal b(p3, {parse_polynomial("x1", p3)});
  CHECK(krull_dim(sum(a, b)) == 2);

  CampaignResult r3 = run_campaign({.campaign = "thm-prod", .trials = 10, .seed = 1, .ambient_n = 3});
  CHECK(r3.ok());
  CHECK(r3.rejected >= 1);
  CHECK(r3.draws == static_cast<uint64_t>(r3.accepted) + static_cast<uint64_t>(r3.rejected));
}

TEST_CASE("arrangement campaigns meet the member-count bound") {
  CampaignResult dj = run_campaign(
      {.campaign = "disjoint-union", .trials = 4, .seed = 5, .ambient_n = 3, .d = 1});
  CHECK(dj.ok());
  for (const auto& rec : dj.records) {
    if (rec.verdict == Verdict::hypothesis_rejected) continue;
    CHECK(quantity_int(rec, "sheaf_reg") == 1);  // one linear subspace is 1-regular
    CHECK(rec.replay.find("arrangement A\n") != std::string::npos);
    CHECK(rec.replay.find("subspace ") != std::string::npos);
  }

  CampaignResult dj4 = run_campaign(
      {.campaign = "disjoint-union", .trials = 4, .seed = 2, .ambient_n = 3, .d = 4});
  CHECK(dj4.ok());
  for (const auto& rec : dj4.records)
    if (rec.verdict != Verdict::hypothesis_rejected) {
      CHECK(quantity_int(rec, "max_pair_dim") == -1);
      CHECK(quantity_int(rec, "sheaf_reg") <= 4);
    }

  // lines in the plane multiply out to a single form of degree d
  CampaignResult ln = run_campaign({.campaign = "lines", .trials = 4, .seed = 3, .ambient_n = 2, .d = 2});
  CHECK(ln.ok());
  for (const auto& rec : ln.records)
    if (rec.verdict != Verdict::hypothesis_rejected) {
      CHECK(quantity_int(rec, "max_pair_dim") == 0);
      CHECK(quantity_int(rec, "sheaf_reg") == 2);
    }

  CampaignResult ln3 = run_campaign({.campaign = "lines", .trials = 4, .seed = 3, .ambient_n = 3, .d = 3});
  CHECK(ln3.ok());
  bool saw_concurrent = false, saw_generic = false;
  for (const auto& rec : ln3.records) {
    saw_concurrent = saw_concurrent || rec.description.find("concurrent") != std::string::npos;
    saw_generic = saw_generic || rec.description.find("generic") != std::string::npos;
    if (rec.verdict != Verdict::hypothesis_rejected)
      CHECK(quantity_int(rec, "sheaf_reg") <= 3);
  }
  CHECK(saw_concurrent);
  CHECK(saw_generic);

  CampaignResult pl = run_campaign(
      {.campaign = "two-planes", .trials = 2, .seed = 4, .ambient_n = 3, .d = 2});
  CHECK(pl.ok());
  for (const auto& rec : pl.records)
    if (rec.verdict != Verdict::hypothesis_rejected) {
      CHECK(quantity_int(rec, "max_pair_dim") == 1);  // hyperplanes in P^3 share a line
      CHECK(quantity_int(rec, "sheaf_reg") == 2);
    }
}

TEST_CASE("cone campaign holds across the corpus") {
  CampaignResult r = run_campaign({.campaign = "cone", .seed = 1});
  CHECK(r.ok());
  CHECK(r.accepted == 24);
  CHECK(r.passed == 24);
  for (const auto& rec : r.records) {
    CHECK(quantity_int(rec, "sheaf_reg") == quantity_int(rec, "cone_reg"));
    CHECK(rec.replay.find("ideal C\n") != std::string::npos);
  }
  // the irrelevant ideal cones to the structure sheaf, not to a point
  const TrialRecord* koszul = nullptr;
  for (const auto& rec : r.records)
    if (rec.description == "cone(koszul-P2, +1)") koszul = &rec;
  REQUIRE(koszul != nullptr);
  CHECK(quantity_int(*koszul, "cone_reg") == 0);
}

TEST_CASE("regularity characterizations agree across the corpus window") {
  CampaignResult r = run_campaign({.campaign = "reg-equiv", .seed = 1});
  CHECK(r.ok());
  CHECK(r.accepted == 48);
  CHECK(r.passed == 48);
  for (const auto& rec : r.records) {
    const std::string* a = find_quantity(rec, "at_m");
    const std::string* b = find_quantity(rec, "from_m");
    const std::string* c = find_quantity(rec, "betti_bound");
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(*a == *b);
    CHECK(*b == *c);
    // below the regularity every verdict is negative, at and above all positive
    bool below = quantity_int(rec, "m") < quantity_int(rec, "reg");
    CHECK(*a == (below ? "false" : "true"));
  }

  // alternate characteristic runs the same corpus end to end
  CampaignResult small = run_campaign({.campaign = "reg-equiv", .seed = 1, .char_p = 101});
  CHECK(small.ok());
  CHECK(small.accepted == 48);
}

TEST_CASE("campaign configuration is validated") {
  CHECK_THROWS_AS(run_campaign({.campaign = "no-such"}), Error);
  CHECK_THROWS_AS(run_campaign({.campaign = "thm-prod", .trials = 0}), Error);
  CHECK_THROWS_AS(run_campaign({.campaign = "thm-prod", .trials = 1, .d = 6}), Error);
  CHECK_THROWS_AS(run_campaign({.campaign = "thm-prod", .trials = 1, .ambient_n = 4}), Error);
  CHECK_THROWS_AS(run_campaign({.campaign = "two-planes", .trials = 1, .ambient_n = 2}), Error);
  CHECK_THROWS_AS(run_campaign({.campaign = "lines", .trials = 1, .ambient_n = 6}), Error);
  CHECK(verdict_name(Verdict::pass) == "pass");
  CHECK(verdict_name(Verdict::fail) == "fail");
  CHECK(verdict_name(Verdict::hypothesis_rejected) == "hypothesis-rejected");
  CHECK_FALSE(CampaignResult{}.ok());  // nothing accepted, nothing proved
}
