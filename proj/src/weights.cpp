#include "gitstrata/weights.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gitstrata {

PointSupport::PointSupport(std::vector<size_t> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

WeightSystem::WeightSystem(size_t dimension, std::vector<QVector> weights, InnerProduct ip,
                           std::optional<std::vector<QMatrix>> weyl,
                           std::optional<std::vector<QVector>> chamber,
                           std::optional<std::vector<Rational>> adjoint_weights)
    : dim_(dimension),
      weights_(std::move(weights)),
      ip_(std::move(ip)),
      weyl_(std::move(weyl)),
      chamber_(std::move(chamber)),
      adjoint_(std::move(adjoint_weights)) {
  if (dim_ == 0) throw std::invalid_argument("weight system dimension must be positive");
  if (weights_.empty()) throw std::invalid_argument("weight system has no weights");
  for (const auto& w : weights_)
    if (w.dim() != dim_) throw std::invalid_argument("weight dimension mismatch");
  if (ip_.dim() != dim_) throw std::invalid_argument("inner product dimension mismatch");
  if (weyl_) {
    if (!chamber_ || chamber_->empty())
      throw std::invalid_argument("a Weyl group requires a nonempty chamber");
    bool has_identity = false;
    const QMatrix id = QMatrix::identity(dim_);
    for (const auto& w : *weyl_) {
      if (w.dim() != dim_) throw std::invalid_argument("Weyl matrix dimension mismatch");
      if (w == id) has_identity = true;
      // exact ip-orthogonality: <Wu, Wv> = <u, v> for basis vectors
      for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
          QVector ei = QVector::zero(dim_), ej = QVector::zero(dim_);
          ei[i] = Rational(1);
          ej[j] = Rational(1);
          if (ip_.pair(w.apply(ei), w.apply(ej)) != ip_.pair(ei, ej))
            throw std::invalid_argument("Weyl matrix does not preserve the inner product");
        }
    }
    if (!has_identity) throw std::invalid_argument("Weyl group does not contain the identity");
    for (const auto& a : *weyl_)
      for (const auto& b : *weyl_) {
        QMatrix ab = a.mul(b);
        bool found = false;
        for (const auto& c : *weyl_)
          if (c == ab) {
            found = true;
            break;
          }
        if (!found) throw std::invalid_argument("Weyl group is not closed under products");
      }
  }
  if (chamber_)
    for (const auto& c : *chamber_)
      if (c.dim() != dim_) throw std::invalid_argument("chamber vector dimension mismatch");
}

bool WeightSystem::in_chamber(const QVector& v) const {
  if (!chamber_) return true;
  for (const auto& c : *chamber_)
    if (ip_.pair(v, c).sign() < 0) return false;
  return true;
}

std::vector<QVector> WeightSystem::support_weights(const PointSupport& x) const {
  if (x.indices.empty()) throw std::invalid_argument("empty support");
  std::vector<QVector> out;
  out.reserve(x.indices.size());
  for (size_t i : x.indices) {
    if (i >= weights_.size()) throw std::invalid_argument("support index out of range");
    out.push_back(weights_[i]);
  }
  return out;
}

Rational mu(const PointSupport& x, const Cocharacter& lambda, const WeightSystem& ws) {
  if (lambda.vector.dim() != ws.dim()) throw std::invalid_argument("cocharacter dimension mismatch");
  if (lambda.vector.is_zero()) throw std::invalid_argument("cocharacter must be nonzero");
  auto w = ws.support_weights(x);
  Rational low = ws.ip().pair(w[0], lambda.vector);
  for (size_t i = 1; i < w.size(); ++i) {
    Rational v = ws.ip().pair(w[i], lambda.vector);
    if (v < low) low = v;
  }
  return -low;
}

NormalizedMu normalized_mu(const PointSupport& x, const Cocharacter& lambda,
                           const WeightSystem& ws) {
  Rational m = mu(x, lambda, ws);
  Rational lam_sq = ws.ip().norm_sq(lambda.vector);
  Rational sq = m * m / lam_sq;
  return {m, m.sign() < 0 ? -sq : sq};
}

const char* to_string(Semistability s) {
  switch (s) {
    case Semistability::Unstable: return "Unstable";
    case Semistability::StrictlySemistable: return "StrictlySemistable";
    case Semistability::Stable: return "Stable";
  }
  return "?";
}

namespace {

Semistability classify_position(HullPosition p) {
  switch (p) {
    case HullPosition::Outside: return Semistability::Unstable;
    case HullPosition::Boundary: return Semistability::StrictlySemistable;
    case HullPosition::Interior: return Semistability::Stable;
  }
  return Semistability::Unstable;
}

int rank_of(Semistability s) { return static_cast<int>(s); }

}  // namespace

Semistability semistability(const PointSupport& x, const WeightSystem& ws) {
  auto base = ws.support_weights(x);
  Semistability status = classify_position(origin_position(base));
  if (ws.weyl()) {
    for (const auto& g : *ws.weyl()) {
      std::vector<QVector> translated;
      translated.reserve(base.size());
      for (const auto& w : base) translated.push_back(g.apply(w));
      Semistability s = classify_position(origin_position(translated));
      if (rank_of(s) < rank_of(status)) status = s;
    }
  }
  return status;
}

std::vector<QVector> index_set(const WeightSystem& ws) {
  size_t n = ws.weights().size();
  if (n > 24) throw std::invalid_argument("index_set: too many weights for exhaustive enumeration");
  std::set<QVector, QVectorLexLess> found;
  std::vector<QVector> subset;
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
    subset.clear();
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) subset.push_back(ws.weights()[i]);
    QVector beta = min_norm_point(subset, ws.ip()).point;
    if (ws.in_chamber(beta)) found.insert(std::move(beta));
  }
  return {found.begin(), found.end()};
}

QVector stratum_of(const PointSupport& x, const WeightSystem& ws) {
  QVector beta = min_norm_point(ws.support_weights(x), ws.ip()).point;
  if (!ws.weyl()) return beta;
  // chamber representative of the Weyl orbit; lexicographically largest
  // on walls
  std::optional<QVector> best;
  for (const auto& g : *ws.weyl()) {
    QVector cand = g.apply(beta);
    if (!ws.in_chamber(cand)) continue;
    if (!best || best->lex_less(cand)) best = std::move(cand);
  }
  return best ? *best : beta;
}

bool membership_Z(const PointSupport& x, const QVector& beta, const WeightSystem& ws) {
  if (beta.is_zero()) throw std::invalid_argument("membership_Z requires beta != 0");
  Rational b2 = ws.ip().norm_sq(beta);
  for (const auto& w : ws.support_weights(x))
    if (ws.ip().pair(w, beta) != b2) return false;
  return true;
}

bool membership_Y(const PointSupport& x, const QVector& beta, const WeightSystem& ws) {
  if (beta.is_zero()) throw std::invalid_argument("membership_Y requires beta != 0");
  Rational b2 = ws.ip().norm_sq(beta);
  bool touches = false;
  for (const auto& w : ws.support_weights(x)) {
    Rational v = ws.ip().pair(w, beta);
    if (v < b2) return false;
    if (v == b2) touches = true;
  }
  return touches;
}

PointSupport limit_support(const PointSupport& x, const Cocharacter& lambda,
                           const WeightSystem& ws) {
  if (lambda.vector.is_zero()) throw std::invalid_argument("cocharacter must be nonzero");
  auto w = ws.support_weights(x);
  Rational low = ws.ip().pair(w[0], lambda.vector);
  for (size_t i = 1; i < w.size(); ++i) {
    Rational v = ws.ip().pair(w[i], lambda.vector);
    if (v < low) low = v;
  }
  std::vector<size_t> keep;
  for (size_t i = 0; i < w.size(); ++i)
    if (ws.ip().pair(w[i], lambda.vector) == low) keep.push_back(x.indices[i]);
  return PointSupport(std::move(keep));
}

ParabolicBlocks parabolic_blocks(std::vector<Rational> weights) {
  if (weights.empty()) throw std::invalid_argument("parabolic_blocks: empty weight list");
  std::sort(weights.begin(), weights.end(), [](const Rational& a, const Rational& b) { return b < a; });
  ParabolicBlocks out{};
  size_t i = 0;
  while (i < weights.size()) {
    size_t j = i;
    while (j < weights.size() && weights[j] == weights[i]) ++j;
    out.block_sizes.push_back(j - i);
    i = j;
  }
  long long levi = 0, uni = 0;
  for (size_t a = 0; a < out.block_sizes.size(); ++a) {
    long long ba = static_cast<long long>(out.block_sizes[a]);
    levi += ba * ba;
    for (size_t b = a + 1; b < out.block_sizes.size(); ++b)
      uni += ba * static_cast<long long>(out.block_sizes[b]);
  }
  out.dim_unipotent = uni;
  out.dim_levi_gl = levi;
  out.dim_parabolic_gl = levi + uni;
  return out;
}

WeightSystem twist(const WeightSystem& ws, const QVector& chi) {
  if (chi.dim() != ws.dim()) throw std::invalid_argument("character dimension mismatch");
  std::vector<QVector> shifted;
  shifted.reserve(ws.weights().size());
  for (const auto& w : ws.weights()) shifted.push_back(w - chi);
  return WeightSystem(ws.dim(), std::move(shifted), ws.ip(), ws.weyl(), ws.chamber(),
                      ws.adjoint_weights());
}

std::vector<EpsWeight> twist_eps(const WeightSystem& ws, const QVector& chi,
                                 const Cocharacter& lambda) {
  if (chi.dim() != ws.dim()) throw std::invalid_argument("character dimension mismatch");
  if (lambda.vector.is_zero()) throw std::invalid_argument("cocharacter must be nonzero");
  Rational eps_part = -ws.ip().pair(chi, lambda.vector);
  std::vector<EpsWeight> out;
  out.reserve(ws.weights().size());
  for (const auto& w : ws.weights())
    out.emplace_back(ws.ip().pair(w - chi, lambda.vector), eps_part);
  return out;
}

bool is_adapted(const std::vector<EpsWeight>& pairings) {
  if (pairings.empty()) throw std::invalid_argument("is_adapted: empty pairing list");
  EpsWeight low = pairings[0];
  for (const auto& p : pairings)
    if (p < low) low = p;
  if (low.sign() >= 0) return false;
  for (const auto& p : pairings)
    if (p != low && p.sign() <= 0) return false;
  return true;
}

bool grades_unipotent(const std::vector<Rational>& adjoint_weights) {
  for (const auto& w : adjoint_weights)
    if (w.sign() <= 0) return false;
  return true;
}

bool grades_unipotent(const WeightSystem& ws) {
  if (!ws.adjoint_weights())
    throw std::invalid_argument("weight system carries no adjoint weights");
  return grades_unipotent(*ws.adjoint_weights());
}

bool totally_stable(const PointSupport& x, const Cocharacter& lambda, const WeightSystem& ws,
                    const std::function<bool(const PointSupport&)>& in_u_zmin,
                    const std::function<bool(const PointSupport&)>& zmin_stable) {
  if (lambda.vector.is_zero()) throw std::invalid_argument("cocharacter must be nonzero");
  // x must lie in the basin of the minimal weight space
  Rational global_low = ws.ip().pair(ws.weights()[0], lambda.vector);
  for (const auto& w : ws.weights()) {
    Rational v = ws.ip().pair(w, lambda.vector);
    if (v < global_low) global_low = v;
  }
  Rational support_low = -mu(x, lambda, ws);
  if (support_low != global_low)
    throw std::invalid_argument("support does not flow to the minimal weight space");
  if (in_u_zmin(x)) return false;
  return zmin_stable(limit_support(x, lambda, ws));
}

}  // namespace gitstrata
