#include "gitstrata/polynomial.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace gitstrata;

namespace {

HilbertPolynomial hp(const char* s) { return HilbertPolynomial::parse(s); }

// the defining limit, sampled: sign of P(n)Q(m) - Q(n)P(m)
int limit_sign(const HilbertPolynomial& p, const HilbertPolynomial& q, long long n, long long m) {
  Rational v = p.eval(Rational(n)) * q.eval(Rational(m)) - q.eval(Rational(n)) * p.eval(Rational(m));
  return v.sign();
}

HilbertPolynomial random_poly(oracles::Rng& rng, int max_deg) {
  int deg = static_cast<int>(rng.pick(0, max_deg));
  std::vector<Rational> c(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = Rational(rng.pick(-3, 3));
  c[static_cast<size_t>(deg)] = Rational(rng.pick(1, 3));  // positive leading coefficient
  return HilbertPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("parse, print and evaluate") {
  CHECK(hp("2t+3").eval(Rational(5)) == Rational(13));
  CHECK(hp("t+2").eval(Rational(10)) == Rational(12));
  CHECK(hp("1").eval(Rational(7)) == Rational(1));
  CHECK(hp("t^2-1/2t+3").to_string() == "t^2-1/2t+3");
  CHECK(hp("2t+3").to_string() == "2t+3");
  CHECK(hp("-t").to_string() == "-t");
  CHECK(hp("3+2t").to_string() == "2t+3");
  CHECK(hp("t^2-1/2t+3").eval(Rational(2)) == Rational(6));
  CHECK(hp("0").is_zero());
  CHECK_THROWS_AS(hp("2t++3"), std::invalid_argument);
  CHECK_THROWS_AS(hp(""), std::invalid_argument);
  CHECK_THROWS_AS(hp("t^"), std::invalid_argument);
}

TEST_CASE("printing and parsing are mutually inverse") {
  oracles::Rng rng(24601);
  for (int round = 0; round < 300; ++round) {
    int deg = static_cast<int>(rng.pick(0, 5));
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = rng.rational(9, 9);
    HilbertPolynomial p(std::move(c));
    CHECK(HilbertPolynomial::parse(p.to_string()) == p);
  }
}

TEST_CASE("rudakov order on the worked pairs") {
  // sampled limit agrees: (t+2, t+1) at (10, 100)
  CHECK(limit_sign(hp("t+2"), hp("t+1"), 10, 100) == 1);
  CHECK(rudakov_compare(hp("t+2"), hp("t+1")) == Ordering::Greater);
  CHECK(rudakov_compare(hp("t+1"), hp("2t+2")) == Ordering::Equal);
  // torsion dominates: 1/1 against (n+1)/(m+1) < 1
  CHECK(limit_sign(hp("1"), hp("t+1"), 10, 100) == 1);
  CHECK(rudakov_compare(hp("1"), hp("t+1")) == Ordering::Greater);
  CHECK(rudakov_compare(hp("t+1"), hp("1")) == Ordering::Less);
  CHECK_THROWS_AS(rudakov_compare(hp("-t+1"), hp("t+1")), std::invalid_argument);
  CHECK_THROWS_AS(rudakov_compare(hp("0"), hp("t")), std::invalid_argument);
}

TEST_CASE("rudakov order is a total preorder matching the sampled limit") {
  oracles::Rng rng(991);
  std::vector<HilbertPolynomial> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(random_poly(rng, 3));
  auto key = [](const HilbertPolynomial& p) {
    // normalised representative p / lc(p)
    return p.scaled(Rational(1) / p.leading_coeff());
  };
  for (size_t a = 0; a < pool.size(); ++a)
    for (size_t b = 0; b < pool.size(); ++b) {
      Ordering ab = rudakov_compare(pool[a], pool[b]);
      Ordering ba = rudakov_compare(pool[b], pool[a]);
      // antisymmetry of the comparison
      if (ab == Ordering::Greater) CHECK(ba == Ordering::Less);
      if (ab == Ordering::Equal) {
        CHECK(ba == Ordering::Equal);
        CHECK(key(pool[a]) == key(pool[b]));  // Equal exactly on proportional pairs
      }
      // closed form against the defining limit, m >> n >> 0
      int s = limit_sign(pool[a], pool[b], 50, 2500);
      if (ab == Ordering::Greater) CHECK(s == 1);
      if (ab == Ordering::Less) CHECK(s == -1);
      if (ab == Ordering::Equal) CHECK(s == 0);
    }
  // transitivity on random triples
  for (int round = 0; round < 400; ++round) {
    const auto& p = pool[static_cast<size_t>(rng.pick(0, 59))];
    const auto& q = pool[static_cast<size_t>(rng.pick(0, 59))];
    const auto& r = pool[static_cast<size_t>(rng.pick(0, 59))];
    auto le = [](Ordering o) { return o != Ordering::Greater; };
    if (le(rudakov_compare(p, q)) && le(rudakov_compare(q, r)))
      CHECK(le(rudakov_compare(p, r)));
  }
}

TEST_CASE("degree-one polynomials order by slope") {
  // genus zero: P = r t + d + r
  auto curve = [](long long r, long long d) {
    return HilbertPolynomial::linear(Rational(r), Rational(d + r));
  };
  oracles::Rng rng(5151);
  for (int round = 0; round < 200; ++round) {
    long long r1 = rng.pick(1, 6), r2 = rng.pick(1, 6);
    long long d1 = rng.pick(-8, 8), d2 = rng.pick(-8, 8);
    Ordering o = rudakov_compare(curve(r1, d1), curve(r2, d2));
    Rational s1(d1, r1), s2(d2, r2);
    if (s1 > s2) CHECK(o == Ordering::Greater);
    if (s1 < s2) CHECK(o == Ordering::Less);
    if (s1 == s2) CHECK(o == Ordering::Equal);
  }
}

TEST_CASE("hn type validation") {
  CHECK(validate_hn_type({hp("t+2"), hp("t+1")}, hp("2t+3")).ok);
  auto bad_order = validate_hn_type({hp("t+1"), hp("t+2")}, hp("2t+3"));
  CHECK_FALSE(bad_order.ok);
  CHECK(bad_order.diagnostic.find("strictly decreasing") != std::string::npos);
  CHECK(validate_hn_type({hp("2t+3")}, hp("2t+3")).ok);
  auto bad_sum = validate_hn_type({hp("t+2"), hp("t+1")}, hp("2t+4"));
  CHECK_FALSE(bad_sum.ok);
  CHECK(bad_sum.diagnostic.find("sum") != std::string::npos);
  CHECK_THROWS_AS(HNType({hp("t+1"), hp("t+2")}), std::invalid_argument);
}

TEST_CASE("beta vector of the worked type") {
  HNType tau({hp("t+2"), hp("t+1")});
  BetaVector bv = beta_of_type(tau, 5, 10);
  REQUIRE(bv.entries.size() == 2);
  CHECK(bv.entries[0].first == Rational(5, 91));
  CHECK(bv.entries[0].second == 7);
  CHECK(bv.entries[1].first == Rational(-5, 78));
  CHECK(bv.entries[1].second == 6);
  // trace: 7*(5/91) + 6*(-5/78) = 0
  CHECK(bv.trace() == Rational(0));
  CHECK(bv.total_multiplicity() == 13);
}

TEST_CASE("beta vector degenerate and error cases") {
  HNType single({hp("2t+3")});
  BetaVector bv = beta_of_type(single, 5, 10);
  REQUIRE(bv.entries.size() == 1);
  CHECK(bv.entries[0].first == Rational(0));
  CHECK(bv.entries[0].second == 13);

  HNType tau({hp("t+2"), hp("t+1")});
  CHECK_THROWS_AS(beta_of_type(tau, 10, 5), std::invalid_argument);
  // P_2(n) <= 0: n not large enough
  HNType neg({hp("t+2"), hp("t-9")});
  CHECK_THROWS_WITH_AS(beta_of_type(neg, 5, 10),
                       doctest::Contains("n not large enough"), std::invalid_argument);
  // non-integer values
  HNType frac({hp("t+1/2")});
  CHECK_THROWS_WITH_AS(beta_of_type(frac, 5, 10),
                       doctest::Contains("n not large enough"), std::invalid_argument);
}
