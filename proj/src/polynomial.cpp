#include "gitstrata/polynomial.hpp"

#include <limits>
#include <stdexcept>

namespace gitstrata {

std::string HilbertPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& a = c_[i];
    if (a.is_zero()) continue;
    bool first = out.empty();
    Rational mag = a.abs();
    if (a.sign() < 0)
      out += '-';
    else if (!first)
      out += '+';
    bool unit = (mag == Rational(1));
    if (i == 0) {
      out += mag.to_string();
    } else {
      if (!unit) out += mag.to_string();
      out += 't';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

HilbertPolynomial HilbertPolynomial::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };
  size_t i = 0, n = text.size();
  auto skip_ws = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  std::vector<Rational> coeffs;
  auto add = [&](size_t deg, const Rational& c) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += c;
  };
  skip_ws();
  if (i == n) fail("empty");
  bool expect_term = true;
  int sign = 1;
  while (i < n) {
    skip_ws();
    if (i == n) break;
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '+') fail("dangling sign");
      sign = (ch == '-') ? -sign : sign;
      ++i;
      expect_term = true;
      continue;
    }
    // term: [rational] ['t' ['^' int]]
    Rational coeff(1);
    bool saw_coeff = false;
    if (ch >= '0' && ch <= '9') {
      size_t start = i;
      while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
      BigInt num{std::string(text.substr(start, i - start))};
      BigInt den = 1;
      if (i < n && text[i] == '/') {
        ++i;
        size_t ds = i;
        while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
        if (ds == i) fail("missing denominator");
        den = BigInt(std::string(text.substr(ds, i - ds)));
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      saw_coeff = true;
    }
    size_t deg = 0;
    skip_ws();
    if (i < n && (text[i] == 't' || text[i] == 'T')) {
      ++i;
      deg = 1;
      if (i < n && text[i] == '^') {
        ++i;
        size_t ds = i;
        while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
        if (ds == i) fail("missing exponent");
        deg = std::stoul(std::string(text.substr(ds, i - ds)));
      }
    } else if (!saw_coeff) {
      fail("expected term");
    }
    add(deg, sign < 0 ? -coeff : coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) fail("trailing sign");
  return HilbertPolynomial(std::move(coeffs));
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Ordering rudakov_compare(const HilbertPolynomial& p, const HilbertPolynomial& q) {
  if (!(p.leading_coeff() > Rational(0)) || !(q.leading_coeff() > Rational(0)))
    throw std::invalid_argument("rudakov_compare requires positive leading coefficients");
  if (p.degree() != q.degree())
    return p.degree() > q.degree() ? Ordering::Less : Ordering::Greater;
  // Equal degrees: for m >> n >> 0 the sign of P(n)Q(m) - Q(n)P(m) is
  // the sign of (bP - aQ)(n), a = lc(P), b = lc(Q).
  HilbertPolynomial d = p.scaled(q.leading_coeff()) - q.scaled(p.leading_coeff());
  if (d.is_zero()) return Ordering::Equal;
  return d.leading_coeff() > Rational(0) ? Ordering::Greater : Ordering::Less;
}

HnValidation validate_hn_type(const std::vector<HilbertPolynomial>& tau,
                              const HilbertPolynomial& total) {
  if (tau.empty()) return {false, "type has no entries"};
  for (size_t i = 0; i < tau.size(); ++i)
    if (!(tau[i].leading_coeff() > Rational(0)))
      return {false, "entry " + std::to_string(i + 1) + " has non-positive leading coefficient"};
  for (size_t i = 0; i + 1 < tau.size(); ++i)
    if (rudakov_compare(tau[i], tau[i + 1]) != Ordering::Greater)
      return {false, "entries " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                         " are not strictly decreasing"};
  HilbertPolynomial sum;
  for (const auto& p : tau) sum = sum + p;
  if (sum != total) return {false, "entries do not sum to the total polynomial"};
  return {true, ""};
}

HNType::HNType(std::vector<HilbertPolynomial> entries) : entries_(std::move(entries)) {
  HilbertPolynomial sum;
  for (const auto& p : entries_) sum = sum + p;
  auto v = validate_hn_type(entries_, sum);
  if (!v.ok) throw std::invalid_argument("invalid HN type: " + v.diagnostic);
}

HilbertPolynomial HNType::total() const {
  HilbertPolynomial sum;
  for (const auto& p : entries_) sum = sum + p;
  return sum;
}

namespace {

long long positive_integer_value(const HilbertPolynomial& p, long long at, const char* what) {
  Rational v = p.eval(Rational(at));
  if (!v.is_integer() || v.sign() <= 0)
    throw std::invalid_argument(std::string("n not large enough for this type: ") + what +
                                " is not a positive integer");
  if (v.num() > BigInt(std::numeric_limits<long long>::max()))
    throw std::invalid_argument("polynomial value out of range");
  return v.num().convert_to<long long>();
}

}  // namespace

BetaVector beta_of_type(const HNType& tau, long long n, long long m) {
  if (m <= n) throw std::invalid_argument("beta_of_type requires m > n");
  HilbertPolynomial total = tau.total();
  long long pn = positive_integer_value(total, n, "P(n)");
  Rational pm = total.eval(Rational(m));
  if (!pm.is_integer() || pm.sign() <= 0)
    throw std::invalid_argument("n not large enough for this type: P(m) is not a positive integer");

  BetaVector out;
  for (const auto& pi : tau.entries()) {
    long long pin = positive_integer_value(pi, n, "P_i(n)");
    long long pim = positive_integer_value(pi, m, "P_i(m)");
    Rational beta = pm / Rational(pn) - Rational(pim) / Rational(pin);
    out.entries.emplace_back(beta, pin);
  }
  for (size_t i = 0; i + 1 < out.entries.size(); ++i)
    if (!(out.entries[i].first > out.entries[i + 1].first))
      throw std::invalid_argument(
          "HN axiom violated: beta values not strictly decreasing at the supplied (n,m)");
  if (!out.trace().is_zero())
    throw std::invalid_argument("HN axiom violated: beta vector has nonzero trace");
  if (out.total_multiplicity() != pn)
    throw std::invalid_argument("HN axiom violated: multiplicities do not sum to P(n)");
  return out;
}

}  // namespace gitstrata
