#pragma once

#include "gitstrata/weights.hpp"

#include <string>
#include <vector>

namespace gitstrata::p1 {

/// Point of the projective line over Q: an affine value or the point at
/// infinity.
struct P1Point {
  bool infinite = false;
  Rational value;

  static P1Point infinity() { return P1Point{true, Rational()}; }
  static P1Point affine(Rational v) { return P1Point{false, std::move(v)}; }

  bool operator==(const P1Point& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  /// Canonical order: affine values ascending, infinity last.
  bool operator<(const P1Point& o) const {
    if (infinite != o.infinite) return !infinite;
    if (infinite) return false;
    return value < o.value;
  }
};

/// Unordered configuration of n points on the projective line, stored
/// canonically sorted.
class Configuration {
public:
  explicit Configuration(std::vector<P1Point> points);
  /// "0,1,inf,inf" with rational values and "inf".
  static Configuration parse(const std::string& text);
  std::string to_string() const;

  size_t n() const { return points_.size(); }
  const std::vector<P1Point>& points() const { return points_; }
  size_t count_infinite() const;
  /// Largest multiplicity of a single point.
  size_t max_multiplicity() const;

  bool operator==(const Configuration& o) const { return points_ == o.points_; }

private:
  std::vector<P1Point> points_;
};

/// Weight system of the n-th symmetric power of the line: weights
/// n-2j for j = 0..n, standard form, sign-flip Weyl group, nonnegative
/// chamber, adjoint weight 2 on the unipotent radical of the Borel.
WeightSystem sym_weight_system(size_t n);

/// Indices of the nonzero coefficients of the degree-n form cutting out
/// the configuration (factor x - v y per affine point v, factor y per
/// point at infinity; coefficient j multiplies x^(n-j) y^j and carries
/// weight n-2j). With this orientation a cluster at infinity occupies
/// the high-j / negative-weight side.
PointSupport to_support(const Configuration& c);

/// Geometric stratum label: 0 when no point has multiplicity exceeding
/// n/2, otherwise 2M-n for the maximal multiplicity M.
Rational classify(const Configuration& c);

enum class YZMembership { InZ, InYOnly, Neither };

const char* to_string(YZMembership m);

/// Exactly i points at infinity (Y), additionally the rest at zero (Z).
YZMembership membership_yz(const Configuration& c, size_t i);

/// Exactly i points at infinity and the remaining affine points do not
/// all coincide (false whenever fewer than two points remain).
bool membership_ts(const Configuration& c, size_t i);

/// Orbit equivalence for the residual affine action z -> a z + b,
/// decided over the algebraic closure by exact cross-power identities
/// of centred elementary symmetric values.
bool affine_equivalent(const Configuration& a, const Configuration& b);

/// z -> a z + b pointwise (a nonzero); fixes infinity.
Configuration apply_affine(const Configuration& c, const Rational& a, const Rational& b);

/// z -> 1/(z - p): sends p to infinity, infinity to zero.
Configuration move_to_infinity(const Configuration& c, const P1Point& p);

/// Dimension of the stabiliser of the configuration under the
/// translation group z -> z + b: one when every point sits at infinity,
/// zero otherwise.
int translation_stab_dim(const Configuration& c);

/// Instability index of the underlying orbit, computed with the
/// convex-geometry engine: the maximal-norm chamber representative of
/// stratum_of over the finitely many orbit positions that diagonalise a
/// possible coincidence cluster (the configuration itself plus each
/// distinct point moved to infinity). An optimal destabilising
/// one-parameter subgroup fixes a cluster point, so this sweep realises
/// the orbit minimum exactly.
QVector engine_stratum(const Configuration& c);

}  // namespace gitstrata::p1
