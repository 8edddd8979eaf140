#include "gitstrata/convex.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gitstrata {

namespace {

// --- exact simplex ---------------------------------------------------
//
// Full-tableau simplex over Rational, Bland's rule throughout, so it
// terminates without cycling.

class Simplex {
public:
  // min c.x  s.t.  A x = b, x >= 0.  Rows are made b >= 0 up front.
  Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : a_(std::move(a)), b_(std::move(b)), m_(a_.size()), n_(m_ ? a_[0].size() : 0) {
    for (size_t i = 0; i < m_; ++i) {
      if (b_[i] < Rational(0)) {
        b_[i] = -b_[i];
        for (auto& v : a_[i]) v = -v;
      }
    }
    // append artificial columns
    for (size_t i = 0; i < m_; ++i) {
      for (size_t r = 0; r < m_; ++r) a_[r].push_back(Rational(r == i ? 1 : 0));
      basis_.push_back(n_ + i);
    }
    cols_ = n_ + m_;
  }

  // Phase one. Returns true when the original system is feasible.
  bool phase_one() {
    std::vector<Rational> cost(cols_);
    for (size_t j = n_; j < cols_; ++j) cost[j] = Rational(1);
    run(cost, cols_);
    Rational v;
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) v += b_[i];
    if (!v.is_zero()) return false;
    purge_artificials();
    return true;
  }

  // Phase two over the original columns only. Call after phase_one().
  void minimize(const std::vector<Rational>& original_cost) {
    std::vector<Rational> cost(cols_);
    for (size_t j = 0; j < n_; ++j) cost[j] = original_cost[j];
    run(cost, n_);
  }

  Rational value_of(size_t var) const {
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] == var) return b_[i];
    return Rational(0);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = b_[i];
    return x;
  }

private:
  void pivot(size_t row, size_t col) {
    Rational p = a_[row][col];
    for (auto& v : a_[row]) v /= p;
    b_[row] /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || a_[i][col].is_zero()) continue;
      Rational f = a_[i][col];
      for (size_t j = 0; j < cols_; ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  // Bland: entering = lowest-index negative reduced cost, leaving =
  // lowest basis index among the ratio-test minimisers.
  void run(const std::vector<Rational>& cost, size_t allowed_cols) {
    for (;;) {
      std::vector<Rational> y(m_);  // c_B restricted to basic rows
      for (size_t i = 0; i < m_; ++i) y[i] = cost[basis_[i]];
      size_t enter = cols_;
      for (size_t j = 0; j < allowed_cols; ++j) {
        bool basic = false;
        for (size_t i = 0; i < m_; ++i)
          if (basis_[i] == j) basic = true;
        if (basic) continue;
        Rational red = cost[j];
        for (size_t i = 0; i < m_; ++i)
          if (!a_[i][j].is_zero()) red -= y[i] * a_[i][j];
        if (red < Rational(0)) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;  // optimal
      size_t leave = m_;
      std::optional<Rational> best;
      for (size_t i = 0; i < m_; ++i) {
        if (!(a_[i][enter] > Rational(0))) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (!best || ratio < *best ||
            (ratio == *best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_)
        throw std::logic_error("unbounded linear program");  // cannot happen on a simplex slice
      pivot(leave, enter);
    }
  }

  // Pivot artificials out of the basis (degenerate pivots); rows that
  // cannot be cleared are redundant and dropped.
  void purge_artificials() {
    for (size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      size_t col = n_;
      for (size_t j = 0; j < n_; ++j)
        if (!a_[i][j].is_zero()) {
          col = j;
          break;
        }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<long>(i));
        b_.erase(b_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        --m_;
      }
    }
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  size_t m_, n_, cols_;
  std::vector<size_t> basis_;
};

void check_points(const std::vector<QVector>& points) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  size_t k = points[0].dim();
  if (k == 0) throw std::invalid_argument("zero-dimensional point");
  for (const auto& p : points)
    if (p.dim() != k) throw std::invalid_argument("dimension mismatch");
}

// rank of span{p_i - p_0} by rational elimination
size_t affine_rank(const std::vector<QVector>& points) {
  size_t k = points[0].dim();
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> r(k);
    for (size_t j = 0; j < k; ++j) r[j] = points[i][j] - points[0][j];
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  for (size_t col = 0; col < k && rank < rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < k; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::pair<std::vector<std::vector<Rational>>, std::vector<Rational>>
hull_system(const std::vector<QVector>& points) {
  size_t k = points[0].dim(), n = points.size();
  std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(n));
  std::vector<Rational> b(k + 1);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < k; ++i) a[i][j] = points[j][i];
    a[k][j] = Rational(1);
  }
  b[k] = Rational(1);
  return {std::move(a), std::move(b)};
}

}  // namespace

const char* to_string(HullPosition p) {
  switch (p) {
    case HullPosition::Outside: return "Outside";
    case HullPosition::Boundary: return "Boundary";
    case HullPosition::Interior: return "Interior";
  }
  return "?";
}

HullPosition origin_position(const std::vector<QVector>& points) {
  check_points(points);
  size_t k = points[0].dim(), n = points.size();
  {
    auto [a, b] = hull_system(points);
    Simplex feas(std::move(a), std::move(b));
    if (!feas.phase_one()) return HullPosition::Outside;
  }
  if (affine_rank(points) < k) return HullPosition::Boundary;
  // 0 is interior iff additionally it has a representation with every
  // barycentric weight strictly positive; by convexity it is enough
  // that each weight can be made positive separately.
  for (size_t j = 0; j < n; ++j) {
    auto [a, b] = hull_system(points);
    Simplex lp(std::move(a), std::move(b));
    if (!lp.phase_one()) return HullPosition::Outside;  // unreachable
    std::vector<Rational> cost(n);
    cost[j] = Rational(-1);  // maximise lambda_j
    lp.minimize(cost);
    if (lp.value_of(j).is_zero()) return HullPosition::Boundary;
  }
  return HullPosition::Interior;
}

namespace {

// --- Wolfe minimum-norm point ----------------------------------------

// Minimiser of |sum l_i s_i|^2 over the affine hull (sum l_i = 1, signs
// free): KKT system [2G 1; 1^T 0]. The corral stays affinely
// independent, so the system is nonsingular.
struct AffineMin {
  std::vector<Rational> lambda;
};

std::optional<AffineMin> affine_min(const std::vector<size_t>& corral,
                                    const std::vector<QVector>& pts,
                                    const InnerProduct& ip) {
  size_t s = corral.size();
  std::vector<std::vector<Rational>> m(s + 1, std::vector<Rational>(s + 2));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j)
      m[i][j] = Rational(2) * ip.pair(pts[corral[i]], pts[corral[j]]);
  for (size_t i = 0; i < s; ++i) {
    m[i][s] = Rational(1);
    m[s][i] = Rational(1);
  }
  m[s][s + 1] = Rational(1);  // rhs
  // plain rational Gaussian elimination
  size_t rows = s + 1;
  for (size_t col = 0; col < rows; ++col) {
    size_t piv = rows;
    for (size_t i = col; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) return std::nullopt;  // affinely dependent
    std::swap(m[col], m[piv]);
    Rational d = m[col][col];
    for (auto& v : m[col]) v /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < s + 2; ++j) m[i][j] -= f * m[col][j];
    }
  }
  AffineMin out;
  out.lambda.resize(s);
  for (size_t i = 0; i < s; ++i) out.lambda[i] = m[i][s + 1];
  return out;
}

QVector combine(const std::vector<size_t>& corral, const std::vector<Rational>& lambda,
                const std::vector<QVector>& pts) {
  QVector x = QVector::zero(pts[0].dim());
  for (size_t i = 0; i < corral.size(); ++i)
    x = x + pts[corral[i]].scaled(lambda[i]);
  return x;
}

}  // namespace

MinNormResult min_norm_point(const std::vector<QVector>& points, const InnerProduct& ip) {
  check_points(points);
  if (ip.dim() != points[0].dim()) throw std::invalid_argument("dimension mismatch");

  // start from the smallest-norm point (ties: lexicographically smallest)
  size_t start = 0;
  Rational best = ip.norm_sq(points[0]);
  for (size_t i = 1; i < points.size(); ++i) {
    Rational ns = ip.norm_sq(points[i]);
    if (ns < best || (ns == best && points[i].lex_less(points[start]))) {
      best = ns;
      start = i;
    }
  }

  std::vector<size_t> corral{start};
  std::vector<Rational> alpha{Rational(1)};
  QVector x = points[start];

  const int max_iter = 100000;
  for (int iter = 0; iter < max_iter; ++iter) {
    // entering point: lowest pairing with x, ties broken lexicographically
    Rational xx = ip.norm_sq(x);
    size_t enter = points.size();
    Rational low;
    for (size_t j = 0; j < points.size(); ++j) {
      Rational v = ip.pair(x, points[j]);
      if (enter == points.size() || v < low ||
          (v == low && points[j].lex_less(points[enter]))) {
        low = v;
        enter = j;
      }
    }
    if (low >= xx) {
      std::vector<std::pair<size_t, Rational>> comb;
      for (size_t i = 0; i < corral.size(); ++i)
        if (!alpha[i].is_zero()) comb.emplace_back(corral[i], alpha[i]);
      std::sort(comb.begin(), comb.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      return MinNormResult{x, xx, std::move(comb)};
    }
    corral.push_back(enter);
    alpha.push_back(Rational(0));

    // minor cycle: pull x toward the affine minimiser, dropping points
    // whose coefficient hits zero, until the minimiser is interior
    for (;;) {
      auto am = affine_min(corral, points, ip);
      if (!am) throw std::logic_error("corral became affinely dependent");
      bool inside = true;
      for (const auto& l : am->lambda)
        if (!(l > Rational(0))) {
          inside = false;
          break;
        }
      if (inside) {
        alpha = am->lambda;
        x = combine(corral, alpha, points);
        break;
      }
      // largest step keeping the combination nonnegative
      std::optional<Rational> theta;
      for (size_t i = 0; i < corral.size(); ++i) {
        if (am->lambda[i] > Rational(0) || am->lambda[i] == alpha[i]) continue;
        Rational t = alpha[i] / (alpha[i] - am->lambda[i]);
        if (!theta || t < *theta) theta = t;
      }
      if (!theta) throw std::logic_error("no blocking coefficient in minor cycle");
      std::vector<size_t> next_corral;
      std::vector<Rational> next_alpha;
      for (size_t i = 0; i < corral.size(); ++i) {
        Rational a = alpha[i] + *theta * (am->lambda[i] - alpha[i]);
        if (a.is_zero()) continue;
        next_corral.push_back(corral[i]);
        next_alpha.push_back(a);
      }
      corral = std::move(next_corral);
      alpha = std::move(next_alpha);
      x = combine(corral, alpha, points);
    }
  }
  throw std::logic_error("minimum-norm iteration failed to terminate");
}

}  // namespace gitstrata
