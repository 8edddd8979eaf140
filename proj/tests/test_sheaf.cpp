#include "gitstrata/sheaf.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace gitstrata;
using namespace gitstrata::sheaf;

namespace {

SplitBundle sb(std::initializer_list<long long> degrees) {
  return SplitBundle(std::vector<long long>(degrees));
}

}  // namespace

TEST_CASE("hilbert polynomials of split bundles") {
  CHECK(hilbert_poly(sb({0})) == HilbertPolynomial::parse("t+1"));
  CHECK(hilbert_poly(sb({2, 0})) == HilbertPolynomial::parse("2t+4"));
  CHECK(hilbert_poly(sb({3})) == HilbertPolynomial::parse("t+4"));
  CHECK_THROWS_AS(SplitBundle({}), std::invalid_argument);
}

TEST_CASE("canonical filtration groups degrees") {
  auto r = hn_filtration(sb({2, 0, 0}));
  REQUIRE(r.pieces.size() == 2);
  CHECK(r.pieces[0].slope == 2);
  CHECK(r.pieces[0].piece == sb({2}));
  CHECK(r.pieces[1].piece == sb({0, 0}));
  REQUIRE(r.type.size() == 2);
  CHECK(r.type[0] == HilbertPolynomial::parse("t+3"));
  CHECK(r.type[1] == HilbertPolynomial::parse("2t+2"));

  auto one = hn_filtration(sb({1, 1}));
  CHECK(one.pieces.size() == 1);
  CHECK(one.type[0] == HilbertPolynomial::parse("2t+4"));

  auto line = hn_filtration(sb({3}));
  CHECK(line.type[0] == HilbertPolynomial::parse("t+4"));
}

TEST_CASE("filtration output always validates, exhaustively at small degrees") {
  // all degree multisets with entries in [-3,3], size <= 5
  std::vector<std::vector<long long>> stack{{}};
  for (int size = 1; size <= 5; ++size) {
    std::vector<std::vector<long long>> next;
    for (const auto& prefix : stack) {
      for (long long d = prefix.empty() ? -3 : prefix.back(); d <= 3; ++d) {
        auto copy = prefix;
        copy.push_back(d);
        next.push_back(std::move(copy));
      }
    }
    stack = std::move(next);
    for (const auto& degrees : stack) {
      SplitBundle b{std::vector<long long>(degrees)};
      auto r = hn_filtration(b);
      auto v = validate_hn_type(r.type, hilbert_poly(b));
      REQUIRE(v.ok);
      // additivity of the polynomials over the pieces
      HilbertPolynomial sum;
      for (const auto& piece : r.pieces) sum = sum + hilbert_poly(piece.piece);
      REQUIRE(sum == hilbert_poly(b));
      // two pieces compare by integer slope
      for (size_t i = 0; i + 1 < r.pieces.size(); ++i) {
        REQUIRE(r.pieces[i].slope > r.pieces[i + 1].slope);
        REQUIRE(rudakov_compare(r.type[i], r.type[i + 1]) == Ordering::Greater);
      }
    }
  }
}

TEST_CASE("hom dimensions on the line") {
  CHECK(hom_dim(sb({0}), sb({2})) == 3);
  CHECK(hom_dim(sb({2}), sb({0})) == 0);
  CHECK(hom_dim(sb({0}), sb({1, 1})) == 4);
  CHECK(end_dim(sb({2, 0})) == 5);
  CHECK(end_dim(sb({0, 0})) == 4);
  CHECK(end_dim(sb({7})) == 1);
}

TEST_CASE("tau-stability and indecomposability of length-2 records") {
  HNType tau({HilbertPolynomial::parse("t+3"), HilbertPolynomial::parse("t+1")});
  auto good = Length2Sheaf::abstract_record(tau, 3, false, true);
  CHECK(is_tau_stable(good));
  CHECK(is_indecomposable(good));

  auto split = Length2Sheaf::abstract_record(tau, 3, true, true);
  CHECK_FALSE(is_tau_stable(split));
  CHECK_FALSE(is_indecomposable(split));

  auto shaky = Length2Sheaf::abstract_record(tau, 3, false, false);
  CHECK_FALSE(is_tau_stable(shaky));
  CHECK(is_indecomposable(shaky));  // indecomposable but not tau-stable

  HNType len1({HilbertPolynomial::parse("t+3")});
  auto wrong = Length2Sheaf::abstract_record(len1, 0, false, true);
  CHECK_THROWS_AS(is_tau_stable(wrong), std::invalid_argument);
  CHECK_THROWS_AS(is_indecomposable(wrong), std::invalid_argument);
}

TEST_CASE("stabiliser dimensions and the endomorphism count") {
  HNType tau({HilbertPolynomial::parse("t+3"), HilbertPolynomial::parse("t+1")});
  auto s3 = stab_dims(Length2Sheaf::abstract_record(tau, 3, false, true));
  CHECK(s3.ustab_dim == 3);
  REQUIRE(s3.end_dim_claim.has_value());
  CHECK(*s3.end_dim_claim == 4);

  auto s0 = stab_dims(Length2Sheaf::abstract_record(tau, 0, false, true));
  CHECK(s0.ustab_dim == 0);
  CHECK(*s0.end_dim_claim == 1);  // simple sheaf

  // the split counterexample: the claim needs indecomposability
  auto concrete = Length2Sheaf::concrete(sb({2}), sb({0}));
  CHECK(concrete.is_split);
  CHECK(concrete.hom == 3);
  auto sc = stab_dims(concrete);
  CHECK(sc.ustab_dim == 3);
  CHECK_FALSE(sc.end_dim_claim.has_value());
  CHECK(end_dim(sb({2, 0})) == 5);  // direct count differs from hom+1 = 4
}

TEST_CASE("no concrete split sheaf on the line is tau-stable") {
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b < a; ++b) {
      auto s = Length2Sheaf::concrete(sb({a}), sb({b}));
      REQUIRE_FALSE(is_tau_stable(s));
      REQUIRE_FALSE(is_indecomposable(s));
    }
}

TEST_CASE("concrete records check their type against the bundles") {
  // equal slopes do not form a strictly decreasing type
  CHECK_THROWS_AS(Length2Sheaf::concrete(sb({1}), sb({1})), std::invalid_argument);
  auto ok = Length2Sheaf::concrete(sb({2, 2}), sb({0}));
  CHECK(ok.tau.entries()[0] == HilbertPolynomial::parse("2t+6"));
  CHECK_FALSE(ok.summands_stable);  // rank-two summand is only semistable
  CHECK(ok.hom == hom_dim(sb({0}), sb({2, 2})));
}

TEST_CASE("cell graphs from sheaf records") {
  HNType tau({HilbertPolynomial::parse("t+3"), HilbertPolynomial::parse("t+1")});
  std::vector<Length2Sheaf> records{
      Length2Sheaf::abstract_record(tau, 0, true, true),
      Length2Sheaf::abstract_record(tau, 0, false, true),
      Length2Sheaf::abstract_record(tau, 3, true, true),
      Length2Sheaf::abstract_record(tau, 3, false, true),
  };
  auto cells = to_blowup_cells(records);
  CHECK(cells.size() == 4);
  BlowupState st = BlowupState::init(cells);
  CHECK(st.p_preserves());
  BlowupState done = st.run();
  CHECK(done.step_count() == 1);
  auto survivors = done.survivors();
  std::sort(survivors.begin(), survivors.end());
  CHECK(survivors == std::vector<std::string>{"d0-nonsplit", "d0-split"});

  // a missing split class is synthesised as the flow target
  std::vector<Length2Sheaf> only_nonsplit{Length2Sheaf::abstract_record(tau, 2, false, true)};
  auto cells2 = to_blowup_cells(only_nonsplit);
  CHECK(cells2.size() == 2);
  CHECK(BlowupState::init(cells2).satisfied());

  // mixed types are rejected
  HNType other({HilbertPolynomial::parse("t+4"), HilbertPolynomial::parse("t+1")});
  std::vector<Length2Sheaf> mixed{Length2Sheaf::abstract_record(tau, 0, true, true),
                                  Length2Sheaf::abstract_record(other, 0, true, true)};
  CHECK_THROWS_AS(to_blowup_cells(mixed), std::invalid_argument);
}

TEST_CASE("beta vectors from filtrations feed the parabolic data") {
  oracles::Rng rng(777);
  for (int round = 0; round < 80; ++round) {
    // random bundle whose filtration has length <= 3
    std::vector<long long> degrees;
    size_t rank = static_cast<size_t>(rng.pick(1, 5));
    for (size_t i = 0; i < rank; ++i) degrees.push_back(rng.pick(-3, 3));
    SplitBundle b{std::move(degrees)};
    auto filt = hn_filtration(b);
    if (filt.type.size() > 3) continue;
    HNType tau(filt.type);
    long long n = 5, m = 9;  // all values positive for degrees >= -3
    BetaVector bv = beta_of_type(tau, n, m);
    // multiplicities are the P_i(n)
    REQUIRE(bv.entries.size() == filt.type.size());
    for (size_t i = 0; i < bv.entries.size(); ++i)
      REQUIRE(Rational(bv.entries[i].second) == filt.type[i].eval(Rational(n)));
    REQUIRE(bv.trace() == Rational(0));
    for (size_t i = 0; i + 1 < bv.entries.size(); ++i)
      REQUIRE(bv.entries[i].first > bv.entries[i + 1].first);
    auto blocks = parabolic_blocks(bv.expanded());
    if (bv.entries.size() == 2)
      REQUIRE(blocks.dim_unipotent == bv.entries[0].second * bv.entries[1].second);
    // consistency of the block sizes with the multiplicities
    REQUIRE(blocks.block_sizes.size() == bv.entries.size());
    for (size_t i = 0; i < blocks.block_sizes.size(); ++i)
      REQUIRE(blocks.block_sizes[i] == static_cast<size_t>(bv.entries[i].second));
  }
}
