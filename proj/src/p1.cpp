#include "gitstrata/p1.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gitstrata::p1 {

Configuration::Configuration(std::vector<P1Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("configuration must contain a point");
  std::sort(points_.begin(), points_.end());
}

Configuration Configuration::parse(const std::string& text) {
  std::vector<P1Point> pts;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument("malformed configuration '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    if (tok == "inf")
      pts.push_back(P1Point::infinity());
    else
      pts.push_back(P1Point::affine(Rational::parse(tok)));
    i = j + 1;
    if (j == text.size()) break;
  }
  return Configuration(std::move(pts));
}

std::string Configuration::to_string() const {
  std::string s;
  for (size_t i = 0; i < points_.size(); ++i) {
    if (i) s += ',';
    s += points_[i].infinite ? "inf" : points_[i].value.to_string();
  }
  return s;
}

size_t Configuration::count_infinite() const {
  size_t k = 0;
  for (const auto& p : points_)
    if (p.infinite) ++k;
  return k;
}

size_t Configuration::max_multiplicity() const {
  size_t best = 1, run = 1;
  for (size_t i = 1; i < points_.size(); ++i) {
    run = (points_[i] == points_[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

WeightSystem sym_weight_system(size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::vector<QVector> weights;
  weights.reserve(n + 1);
  for (size_t j = 0; j <= n; ++j)
    weights.push_back(QVector{Rational(static_cast<long long>(n) - 2 * static_cast<long long>(j))});
  std::vector<QMatrix> weyl{QMatrix::identity(1),
                            QMatrix({{Rational(-1)}})};
  std::vector<QVector> chamber{QVector{Rational(1)}};
  std::vector<Rational> adjoint{Rational(2)};
  return WeightSystem(1, std::move(weights), InnerProduct::identity(1), std::move(weyl),
                      std::move(chamber), std::move(adjoint));
}

PointSupport to_support(const Configuration& c) {
  // expand the product of x - v y (affine v) and y (infinity)
  std::vector<Rational> coeff{Rational(1)};  // coeff[j] of x^(d-j) y^j
  for (const auto& p : c.points()) {
    std::vector<Rational> next(coeff.size() + 1);
    if (p.infinite) {
      for (size_t j = 0; j < coeff.size(); ++j) next[j + 1] += coeff[j];
    } else {
      for (size_t j = 0; j < coeff.size(); ++j) {
        next[j] += coeff[j];
        next[j + 1] -= p.value * coeff[j];
      }
    }
    coeff = std::move(next);
  }
  std::vector<size_t> support;
  for (size_t j = 0; j < coeff.size(); ++j)
    if (!coeff[j].is_zero()) support.push_back(j);
  return PointSupport(std::move(support));
}

Rational classify(const Configuration& c) {
  long long n = static_cast<long long>(c.n());
  long long m = static_cast<long long>(c.max_multiplicity());
  if (2 * m <= n) return Rational(0);
  return Rational(2 * m - n);
}

const char* to_string(YZMembership m) {
  switch (m) {
    case YZMembership::InZ: return "InZ";
    case YZMembership::InYOnly: return "InY_only";
    case YZMembership::Neither: return "Neither";
  }
  return "?";
}

namespace {

void check_index(const Configuration& c, size_t i) {
  if (2 * i <= c.n() || i > c.n())
    throw std::invalid_argument("index i must satisfy n/2 < i <= n");
}

}  // namespace

YZMembership membership_yz(const Configuration& c, size_t i) {
  check_index(c, i);
  if (c.count_infinite() != i) return YZMembership::Neither;
  for (const auto& p : c.points())
    if (!p.infinite && !p.value.is_zero()) return YZMembership::InYOnly;
  return YZMembership::InZ;
}

bool membership_ts(const Configuration& c, size_t i) {
  check_index(c, i);
  if (c.count_infinite() != i) return false;
  std::vector<Rational> rest;
  for (const auto& p : c.points())
    if (!p.infinite) rest.push_back(p.value);
  if (rest.size() <= 1) return false;
  for (const auto& v : rest)
    if (v != rest[0]) return true;
  return false;
}

namespace {

// elementary symmetric values e_1..e_s
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& v) {
  std::vector<Rational> e(v.size() + 1);
  e[0] = Rational(1);
  size_t top = 0;
  for (const auto& x : v) {
    ++top;
    for (size_t k = top; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e;
}

std::vector<Rational> centred_values(const Configuration& c) {
  std::vector<Rational> v;
  v.reserve(c.n());
  Rational mean;
  for (const auto& p : c.points()) {
    if (p.infinite) throw std::invalid_argument("configuration must be fully affine");
    v.push_back(p.value);
    mean += p.value;
  }
  mean /= Rational(static_cast<long long>(v.size()));
  bool constant = true;
  for (auto& x : v) {
    x -= mean;
    if (!x.is_zero()) constant = false;
  }
  if (constant) throw std::invalid_argument("all points coincide");
  return v;
}

Rational pow_rational(const Rational& base, size_t e) {
  Rational out(1);
  for (size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

bool affine_equivalent(const Configuration& a, const Configuration& b) {
  if (a.n() != b.n()) throw std::invalid_argument("configurations differ in size");
  auto va = centred_values(a);
  auto vb = centred_values(b);
  auto ea = elementary_symmetric(va);
  auto eb = elementary_symmetric(vb);
  size_t s = va.size();
  size_t k0 = 0;
  for (size_t k = 2; k <= s; ++k)
    if (!ea[k].is_zero()) {
      k0 = k;
      break;
    }
  // some e_k is nonzero for a non-constant centred multiset
  if (k0 == 0) throw std::logic_error("no nonzero symmetric value");
  if (eb[k0].is_zero()) return false;
  // a scalar with e_k(b) = a^k e_k(a) for all k exists iff the cross
  // powers agree
  for (size_t k = 1; k <= s; ++k) {
    Rational lhs = pow_rational(eb[k], k0) * pow_rational(ea[k0], k);
    Rational rhs = pow_rational(ea[k], k0) * pow_rational(eb[k0], k);
    if (lhs != rhs) return false;
  }
  return true;
}

Configuration apply_affine(const Configuration& c, const Rational& a, const Rational& b) {
  if (a.is_zero()) throw std::invalid_argument("affine map must have a != 0");
  std::vector<P1Point> out;
  out.reserve(c.n());
  for (const auto& p : c.points())
    out.push_back(p.infinite ? P1Point::infinity() : P1Point::affine(a * p.value + b));
  return Configuration(std::move(out));
}

Configuration move_to_infinity(const Configuration& c, const P1Point& p) {
  std::vector<P1Point> out;
  out.reserve(c.n());
  for (const auto& q : c.points()) {
    if (q == p)
      out.push_back(P1Point::infinity());
    else if (q.infinite)
      out.push_back(P1Point::affine(Rational(0)));
    else if (p.infinite)
      out.push_back(q);  // p already at infinity: nothing to move
    else
      out.push_back(P1Point::affine(Rational(1) / (q.value - p.value)));
  }
  return Configuration(std::move(out));
}

int translation_stab_dim(const Configuration& c) {
  return c.count_infinite() == c.n() ? 1 : 0;
}

QVector engine_stratum(const Configuration& c) {
  WeightSystem ws = sym_weight_system(c.n());
  std::vector<Configuration> positions{c};
  std::vector<P1Point> distinct;
  for (const auto& p : c.points())
    if (distinct.empty() || !(distinct.back() == p)) distinct.push_back(p);
  for (const auto& p : distinct)
    if (!p.infinite) positions.push_back(move_to_infinity(c, p));
  std::optional<QVector> best;
  Rational best_norm;
  for (const auto& pos : positions) {
    QVector beta = stratum_of(to_support(pos), ws);
    Rational ns = ws.ip().norm_sq(beta);
    if (!best || ns > best_norm) {
      best = beta;
      best_norm = ns;
    }
  }
  return *best;
}

}  // namespace gitstrata::p1
