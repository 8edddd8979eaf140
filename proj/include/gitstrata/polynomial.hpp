#pragma once

#include "gitstrata/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace gitstrata {

/// Element of Q[t], monomial basis, lowest degree first. The zero
/// polynomial is representable (empty coefficient list) so that
/// arithmetic stays closed; operations that require a sheaf Hilbert
/// polynomial reject non-positive leading coefficients.
class HilbertPolynomial {
public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static HilbertPolynomial constant(Rational v) {
    return HilbertPolynomial(std::vector<Rational>{std::move(v)});
  }
  /// a*t + b
  static HilbertPolynomial linear(Rational a, Rational b) {
    return HilbertPolynomial(std::vector<Rational>{std::move(b), std::move(a)});
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational leading_coeff() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& t) const {
    Rational v;
    for (size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
  }

  HilbertPolynomial operator+(const HilbertPolynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return HilbertPolynomial(std::move(r));
  }
  HilbertPolynomial operator-(const HilbertPolynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return HilbertPolynomial(std::move(r));
  }
  HilbertPolynomial scaled(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= s;
    return HilbertPolynomial(std::move(r));
  }

  bool operator==(const HilbertPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const HilbertPolynomial& o) const { return !(*this == o); }

  /// Canonical text form, highest degree first: "t^2-1/2t+3".
  std::string to_string() const;
  /// Parses the same grammar: rational coefficients, 't', caret powers.
  static HilbertPolynomial parse(std::string_view text);

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

enum class Ordering { Less, Equal, Greater };

const char* to_string(Ordering o);

/// Eventual sign of P(n)/P(m) - Q(n)/Q(m) for m >> n >> 0 (equivalently
/// of P(n)Q(m) - Q(n)P(m)): Greater when P eventually dominates, Equal
/// exactly on proportional pairs. Requires positive leading
/// coefficients; for equal degrees with leading coefficients a, b the
/// answer is the sign of the leading coefficient of bP - aQ, and the
/// higher-degree polynomial always compares Less.
Ordering rudakov_compare(const HilbertPolynomial& p, const HilbertPolynomial& q);

struct HnValidation {
  bool ok;
  std::string diagnostic;  // names the first violated condition
};

HnValidation validate_hn_type(const std::vector<HilbertPolynomial>& tau,
                              const HilbertPolynomial& total);

/// Ordered list (P_1,...,P_l), strictly decreasing in the Rudakov
/// order, every entry with positive leading coefficient; checked at
/// construction.
class HNType {
public:
  explicit HNType(std::vector<HilbertPolynomial> entries);
  const std::vector<HilbertPolynomial>& entries() const { return entries_; }
  size_t length() const { return entries_.size(); }
  HilbertPolynomial total() const;

private:
  std::vector<HilbertPolynomial> entries_;
};

/// Diagonal cocharacter weights grouped by value: strictly decreasing
/// values with multiplicities summing to P(n), trace zero.
struct BetaVector {
  std::vector<std::pair<Rational, long long>> entries;  // (value, multiplicity)

  long long total_multiplicity() const {
    long long s = 0;
    for (const auto& e : entries) s += e.second;
    return s;
  }
  Rational trace() const {
    Rational t;
    for (const auto& e : entries) t += e.first * Rational(e.second);
    return t;
  }
  /// Expanded weight list, one value per repetition.
  std::vector<Rational> expanded() const {
    std::vector<Rational> out;
    for (const auto& e : entries)
      for (long long i = 0; i < e.second; ++i) out.push_back(e.first);
    return out;
  }
};

/// beta_i = P(m)/P(n) - P_i(m)/P_i(n), repeated P_i(n) times, where
/// P = sum of the entries of tau. Requires m > n and every P_i(n),
/// P_i(m), P(n) to be a positive integer; reports which axiom failed
/// otherwise ("n not large enough for this type" on integrality).
BetaVector beta_of_type(const HNType& tau, long long n, long long m);

}  // namespace gitstrata
