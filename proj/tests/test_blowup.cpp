#include "gitstrata/blowup.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace gitstrata;

namespace {

EpsWeight ew(long long main_part, long long eps_part = 0) {
  return EpsWeight(Rational(main_part), Rational(eps_part));
}

StratumCell cell(std::string id, int dim, std::string flows_to,
                 std::vector<EpsWeight> weights, std::vector<std::string> closed_in = {}) {
  StratumCell c;
  c.id = std::move(id);
  c.ustab_dim = dim;
  c.flows_to = std::move(flows_to);
  c.lambda_weights = std::move(weights);
  c.closed_in = std::move(closed_in);
  return c;
}

}  // namespace

TEST_CASE("init validates the flow graph") {
  CHECK_THROWS_AS(BlowupState::init({}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(BlowupState::init({cell("A", 0, "B", {ew(0)})}),
                       doctest::Contains("'A'"), std::invalid_argument);
  // flowing uphill in weight
  CHECK_THROWS_AS(BlowupState::init({cell("Z", 0, "Z", {ew(1)}),
                                     cell("A", 0, "Z", {ew(0)})}),
                  std::invalid_argument);
  // two-cycle has no fixed limit
  CHECK_THROWS_AS(BlowupState::init({cell("A", 0, "B", {ew(0)}), cell("B", 0, "A", {ew(0)})}),
                  std::invalid_argument);

  BlowupState single = BlowupState::init({cell("Z", 0, "Z", {ew(0)})});
  CHECK(single.satisfied());
  CHECK(single.d_max() == 0);

  BlowupState constant = BlowupState::init(
      {cell("Z", 1, "Z", {ew(0)}), cell("Y", 1, "Z", {ew(0), ew(1)})});
  CHECK(constant.satisfied());
  CHECK(constant.d_max() == 1);
  CHECK(constant.d_min() == 1);
  CHECK(constant.p_preserves());
}

TEST_CASE("case-1 step removes the maximal stabiliser locus") {
  BlowupState st = BlowupState::init({cell("Z", 0, "Z", {ew(0)}),
                                      cell("A", 0, "Z", {ew(0), ew(1)}),
                                      cell("B", 2, "Z", {ew(0), ew(2)})});
  CHECK(st.d_max() == 2);
  CHECK(st.d_min() == 0);
  CHECK_FALSE(st.satisfied());
  BlowupState next = st.step();
  CHECK(next.satisfied());
  CHECK(next.d_max() == 0);
  CHECK(next.removed().count("B") == 1);
  CHECK(next.survivors() == std::vector<std::string>{"Z", "A"});
  REQUIRE(next.trace().size() == 1);
  CHECK(next.trace()[0].case_tag == "case-1");
  CHECK(next.trace()[0].centre_ids == std::vector<std::string>{"B"});
  CHECK_THROWS_AS(next.step(), StepNotApplicable);

  BlowupState done = st.run();
  CHECK(done.step_count() == 1);
  CHECK(done.survivors() == std::vector<std::string>{"Z", "A"});
}

TEST_CASE("cells flowing into a removed centre become exceptional") {
  // basin cell C flows to the removed fixed cell B
  BlowupState st = BlowupState::init({cell("Z", 0, "Z", {ew(0)}),
                                      cell("B", 2, "B", {ew(0)}),
                                      cell("C", 0, "B", {ew(0), ew(1)})});
  BlowupState next = st.step();
  CHECK(next.removed().count("B") == 1);
  CHECK(next.removed().count("C") == 0);
  const StratumCell* c = nullptr;
  for (const auto& cc : next.cells())
    if (cc.id == "C") c = &cc;
  REQUIRE(c != nullptr);
  CHECK(c->exceptional);
  // exceptional cells never rejoin the surviving locus
  CHECK(next.run().survivors() == std::vector<std::string>{"Z"});
}

TEST_CASE("closure joins the centre through closed_in") {
  BlowupState st = BlowupState::init({cell("Z", 0, "Z", {ew(0)}),
                                      cell("B", 2, "Z", {ew(0), ew(2)}),
                                      cell("D", 1, "Z", {ew(0), ew(1)}, {"B"})});
  BlowupState next = st.step();
  CHECK(next.removed().count("B") == 1);
  CHECK(next.removed().count("D") == 1);  // inside the closure of the centre
  CHECK(next.survivors() == std::vector<std::string>{"Z"});
}

TEST_CASE("case-2 step installs synthetic minimal cells and records r_min") {
  BlowupState st = BlowupState::init({cell("Z", 2, "Z", {ew(0)}),
                                      cell("W1", 2, "Z", {ew(0), ew(1)}),
                                      cell("W2", 0, "Z", {ew(0), ew(2)})});
  CHECK(st.d_max() == 2);
  BlowupState next = st.step();
  REQUIRE(next.trace().size() == 1);
  const StepRecord& rec = next.trace()[0];
  CHECK(rec.case_tag == "case-2");
  REQUIRE(rec.r_min.has_value());
  CHECK(*rec.r_min == ew(2));  // W1 lies inside the centre, W2 escapes
  CHECK(next.d_max() == 0);
  // the new minimal cell is flagged exceptional and synthetic cells
  // carry the source dimension
  REQUIRE(next.zmin_ids().size() == 1);
  const StratumCell* z = nullptr;
  for (const auto& c : next.cells())
    if (c.id == next.zmin_ids()[0]) z = &c;
  REQUIRE(z != nullptr);
  CHECK(z->exceptional);
  CHECK(z->ustab_dim == 0);
  CHECK(next.satisfied());
  // the escaping source cell re-flows onto the new minimal cell and
  // stays in the surviving locus
  CHECK(next.survivors() == std::vector<std::string>{"W2"});
}

TEST_CASE("p_preserves graphs never leave case 1 and finish on the target stratum") {
  // three hom-dimension classes, split and non-split each
  std::vector<StratumCell> cells;
  for (int d : {0, 1, 3}) {
    cells.push_back(cell("s" + std::to_string(d), d, "s" + std::to_string(d), {ew(0)}));
    cells.push_back(cell("n" + std::to_string(d), d, "s" + std::to_string(d), {ew(0), ew(1)}));
  }
  BlowupState st = BlowupState::init(std::move(cells));
  CHECK(st.p_preserves());
  CHECK(st.d_max() == 3);
  CHECK(st.d_min() == 0);
  BlowupState done = st.run();
  CHECK(done.step_count() == 2);  // d_max 3 -> 1 -> 0
  for (const auto& rec : done.trace()) CHECK(rec.case_tag == "case-1");
  CHECK(done.trace()[0].d_max_after == 1);
  CHECK(done.trace()[1].d_max_after == 0);
  auto survivors = done.survivors();
  std::sort(survivors.begin(), survivors.end());
  CHECK(survivors == std::vector<std::string>{"n0", "s0"});
}

TEST_CASE("random p_preserves graphs terminate within the dimension budget") {
  oracles::Rng rng(424242);
  for (int round = 0; round < 60; ++round) {
    std::vector<StratumCell> cells;
    int classes = static_cast<int>(rng.pick(1, 5));
    std::vector<int> dims;
    for (int i = 0; i < classes; ++i) {
      int d;
      do
        d = static_cast<int>(rng.pick(0, 6));
      while (std::find(dims.begin(), dims.end(), d) != dims.end());
      dims.push_back(d);
      cells.push_back(cell("s" + std::to_string(d), d, "s" + std::to_string(d), {ew(0)}));
      long long extra = rng.pick(0, 2);
      for (long long k = 0; k < extra; ++k)
        cells.push_back(cell("n" + std::to_string(d) + "_" + std::to_string(k), d,
                             "s" + std::to_string(d), {ew(0), ew(rng.pick(1, 4))}));
    }
    BlowupState st = BlowupState::init(std::move(cells));
    REQUIRE(st.p_preserves());
    int budget = st.d_max() - st.d_min();
    BlowupState done = st.run();
    REQUIRE(done.step_count() <= budget);
    int target = st.d_min();
    for (const auto& rec : done.trace()) REQUIRE(rec.case_tag == "case-1");
    // survivors are exactly the cells of the minimal dimension class
    for (const auto& id : done.survivors()) {
      for (const auto& c : done.cells())
        if (c.id == id) REQUIRE(c.ustab_dim == target);
    }
    // d_max strictly decreases along the trace
    int prev = st.d_max();
    for (const auto& rec : done.trace()) {
      REQUIRE(rec.d_max_after < prev);
      prev = rec.d_max_after;
    }
  }
}

TEST_CASE("weight clusters after a blow-up") {
  auto clusters = cluster_weights({Rational(4), Rational(2)}, {0});
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0] == EpsWeight(Rational(2), Rational(2)));
  CHECK(clusters[1] == EpsWeight(Rational(4), Rational(2)));

  // empty centre: every weight perturbs every other
  auto all = cluster_weights({Rational(1), Rational(-1)}, {});
  CHECK(all.size() == 4);

  auto single = cluster_weights({Rational(3)}, {});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == EpsWeight(Rational(3), Rational(3)));

  CHECK_THROWS_AS(cluster_weights({Rational(1)}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(cluster_weights({}, {}), std::invalid_argument);
}

TEST_CASE("eps weights order lexicographically with the documented sign") {
  CHECK(EpsWeight(Rational(0), Rational(-2)).sign() == -1);
  CHECK(EpsWeight(Rational(0), Rational(1)).sign() == 1);
  CHECK(EpsWeight(Rational(-1), Rational(5)).sign() == -1);
  CHECK(EpsWeight(Rational(0), Rational(0)).sign() == 0);
  CHECK(EpsWeight(Rational(1), Rational(-9)) > EpsWeight(Rational(0), Rational(9)));
  CHECK(EpsWeight(Rational(1), Rational(0)) < EpsWeight(Rational(1), Rational(1)));
  CHECK(EpsWeight(Rational(2), Rational(-2)).to_string() == "2-2eps");
  CHECK(EpsWeight(Rational(0), Rational(-2)).to_string() == "-2eps");
  CHECK(EpsWeight(Rational(0), Rational(1)).to_string() == "eps");
}
