#pragma once

#include "gitstrata/convex.hpp"
#include "gitstrata/epsweight.hpp"
#include "gitstrata/qvector.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gitstrata {

/// A point of projective space, seen through the torus action: just the
/// set of coordinate indices that are nonzero.
struct PointSupport {
  std::vector<size_t> indices;  // sorted, unique

  PointSupport() = default;
  explicit PointSupport(std::vector<size_t> idx);
  bool operator==(const PointSupport& o) const { return indices == o.indices; }
};

struct Cocharacter {
  QVector vector;
};

/// A linearised action presented combinatorially: the list of torus
/// weights, the invariant inner product, and optionally a finite Weyl
/// group with a positive chamber and the adjoint weights on the
/// unipotent radical.
class WeightSystem {
public:
  WeightSystem(size_t dimension, std::vector<QVector> weights, InnerProduct ip,
               std::optional<std::vector<QMatrix>> weyl = std::nullopt,
               std::optional<std::vector<QVector>> chamber = std::nullopt,
               std::optional<std::vector<Rational>> adjoint_weights = std::nullopt);

  size_t dim() const { return dim_; }
  const std::vector<QVector>& weights() const { return weights_; }
  const InnerProduct& ip() const { return ip_; }
  const std::optional<std::vector<QMatrix>>& weyl() const { return weyl_; }
  const std::optional<std::vector<QVector>>& chamber() const { return chamber_; }
  const std::optional<std::vector<Rational>>& adjoint_weights() const { return adjoint_; }

  bool in_chamber(const QVector& v) const;
  std::vector<QVector> support_weights(const PointSupport& x) const;

private:
  size_t dim_;
  std::vector<QVector> weights_;
  InnerProduct ip_;
  std::optional<std::vector<QMatrix>> weyl_;
  std::optional<std::vector<QVector>> chamber_;
  std::optional<std::vector<Rational>> adjoint_;
};

/// Hilbert-Mumford weight: mu(x, lambda) = -min over the support of
/// <w_i, lambda>. The sign convention is anchored so that points whose
/// weights all pair to |beta|^2 satisfy mu(x, lambda_beta) = -|beta|^2.
Rational mu(const PointSupport& x, const Cocharacter& lambda, const WeightSystem& ws);

struct NormalizedMu {
  Rational mu;
  Rational signed_m_sq;  // sign(mu) * mu^2 / |lambda|^2, exact surrogate for mu/|lambda|
};

NormalizedMu normalized_mu(const PointSupport& x, const Cocharacter& lambda,
                           const WeightSystem& ws);

enum class Semistability { Unstable, StrictlySemistable, Stable };

const char* to_string(Semistability s);

/// Hull position of the origin in the support's weight polytope, taken
/// as the worst status over all Weyl translates when a Weyl group is
/// present.
Semistability semistability(const PointSupport& x, const WeightSystem& ws);

/// All closest points to the origin of convex hulls of weight subsets,
/// deduplicated; restricted to the closed positive chamber when one is
/// given. Exhaustive over the 2^(N+1)-1 nonempty subsets.
std::vector<QVector> index_set(const WeightSystem& ws);

/// The instability index of a support: the closest point of its weight
/// hull to the origin, presented as the chamber representative of its
/// Weyl orbit (ties on chamber walls resolved lexicographically
/// largest). Zero exactly on semistable supports.
QVector stratum_of(const PointSupport& x, const WeightSystem& ws);

/// All support weights pair with beta to exactly |beta|^2.
bool membership_Z(const PointSupport& x, const QVector& beta, const WeightSystem& ws);
/// All support weights pair >= |beta|^2 and at least one attains it.
bool membership_Y(const PointSupport& x, const QVector& beta, const WeightSystem& ws);

/// The subset of the support on which the pairing with lambda attains
/// its minimum: the fixed-point component the lambda-flow lands in.
PointSupport limit_support(const PointSupport& x, const Cocharacter& lambda,
                           const WeightSystem& ws);

struct ParabolicBlocks {
  std::vector<size_t> block_sizes;  // descending weight order
  long long dim_unipotent;
  long long dim_levi_gl;
  long long dim_parabolic_gl;
  long long dim_levi_sl() const { return dim_levi_gl - 1; }
  long long dim_parabolic_sl() const { return dim_parabolic_gl - 1; }
};

/// Block data of the parabolic attached to a diagonal cocharacter with
/// the given weights on V.
ParabolicBlocks parabolic_blocks(std::vector<Rational> weights);

/// Shift every weight by -chi.
WeightSystem twist(const WeightSystem& ws, const QVector& chi);

/// Pairings of the (1+eps)-twisted weights against lambda:
/// main = <w - chi, lambda>, eps part = -<chi, lambda>.
std::vector<EpsWeight> twist_eps(const WeightSystem& ws, const QVector& chi,
                                 const Cocharacter& lambda);

/// Adapted linearisation test: the lowest pairing is strictly negative
/// and every other distinct pairing is strictly positive.
bool is_adapted(const std::vector<EpsWeight>& pairings);

/// All adjoint weights on the unipotent radical strictly positive.
bool grades_unipotent(const std::vector<Rational>& adjoint_weights);
bool grades_unipotent(const WeightSystem& ws);

/// Totally-stable predicate: x must flow to the minimal weight space
/// (else an input error, distinct from false); then true iff x is off
/// the unipotent sweep of Z_min and its limit lands in the stable part
/// of Z_min. Both facts are beyond the weight data, so the caller
/// supplies them.
bool totally_stable(const PointSupport& x, const Cocharacter& lambda, const WeightSystem& ws,
                    const std::function<bool(const PointSupport&)>& in_u_zmin,
                    const std::function<bool(const PointSupport&)>& zmin_stable);

}  // namespace gitstrata
