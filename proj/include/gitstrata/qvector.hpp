#pragma once

#include "gitstrata/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstrata {

/// Fixed-dimension vector of exact rationals (a point of a rational
/// vector space or its dual; the code does not distinguish the two,
/// pairings are always taken through an explicit InnerProduct).
class QVector {
public:
  QVector() = default;
  explicit QVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  QVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  size_t dim() const { return coords_.size(); }
  const Rational& operator[](size_t i) const { return coords_[i]; }
  Rational& operator[](size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  QVector operator+(const QVector& o) const {
    check_dim(o);
    std::vector<Rational> r(coords_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return QVector(std::move(r));
  }
  QVector operator-(const QVector& o) const {
    check_dim(o);
    std::vector<Rational> r(coords_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
    return QVector(std::move(r));
  }
  QVector scaled(const Rational& c) const {
    std::vector<Rational> r(coords_);
    for (auto& x : r) x *= c;
    return QVector(std::move(r));
  }
  static QVector zero(size_t k) { return QVector(std::vector<Rational>(k)); }

  bool operator==(const QVector& o) const { return coords_ == o.coords_; }
  bool operator!=(const QVector& o) const { return !(*this == o); }

  /// Lexicographic order on coordinates; the deterministic tie-break
  /// used throughout.
  bool lex_less(const QVector& o) const {
    check_dim(o);
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] < o.coords_[i]) return true;
      if (o.coords_[i] < coords_[i]) return false;
    }
    return false;
  }

  /// "a" in dimension one, "(a,b,...)" otherwise.
  std::string to_string() const {
    if (coords_.size() == 1) return coords_[0].to_string();
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += coords_[i].to_string();
    }
    s += ')';
    return s;
  }

private:
  void check_dim(const QVector& o) const {
    if (coords_.size() != o.coords_.size())
      throw std::invalid_argument("dimension mismatch");
  }
  std::vector<Rational> coords_;
};

struct QVectorLexLess {
  bool operator()(const QVector& a, const QVector& b) const { return a.lex_less(b); }
};

/// Square rational matrix, row major. Used for inner products and for
/// the finite Weyl group elements.
class QMatrix {
public:
  QMatrix() = default;
  explicit QMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != rows_.size()) throw std::invalid_argument("matrix is not square");
  }

  static QMatrix identity(size_t k) {
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i) rows[i][i] = Rational(1);
    return QMatrix(std::move(rows));
  }

  size_t dim() const { return rows_.size(); }
  const Rational& at(size_t i, size_t j) const { return rows_[i][j]; }

  QVector apply(const QVector& v) const {
    if (v.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Rational> out(dim());
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < dim(); ++j) out[i] += rows_[i][j] * v[j];
    return QVector(std::move(out));
  }

  QMatrix mul(const QMatrix& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<std::vector<Rational>> out(dim(), std::vector<Rational>(dim()));
    for (size_t i = 0; i < dim(); ++i)
      for (size_t k = 0; k < dim(); ++k)
        for (size_t j = 0; j < dim(); ++j) out[i][j] += rows_[i][k] * o.rows_[k][j];
    return QMatrix(std::move(out));
  }

  bool operator==(const QMatrix& o) const { return rows_ == o.rows_; }

private:
  std::vector<std::vector<Rational>> rows_;
};

/// Symmetric positive-definite rational bilinear form. Definiteness is
/// checked exactly at construction: the symmetric Gaussian pivots must
/// stay positive.
class InnerProduct {
public:
  static InnerProduct identity(size_t k) { return InnerProduct(QMatrix::identity(k)); }

  explicit InnerProduct(QMatrix m) : m_(std::move(m)) { validate(); }

  size_t dim() const { return m_.dim(); }
  const QMatrix& matrix() const { return m_; }

  Rational pair(const QVector& a, const QVector& b) const {
    if (a.dim() != dim() || b.dim() != dim())
      throw std::invalid_argument("dimension mismatch");
    Rational s;
    for (size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      Rational row;
      for (size_t j = 0; j < dim(); ++j) row += m_.at(i, j) * b[j];
      s += a[i] * row;
    }
    return s;
  }

  Rational norm_sq(const QVector& a) const { return pair(a, a); }

private:
  void validate() const {
    size_t k = dim();
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j)
        if (m_.at(i, j) != m_.at(j, i))
          throw std::invalid_argument("inner product matrix is not symmetric");
    // Fraction-free symmetric elimination; all pivots must be > 0.
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) a[i][j] = m_.at(i, j);
    for (size_t p = 0; p < k; ++p) {
      if (!(a[p][p] > Rational(0)))
        throw std::invalid_argument("inner product matrix is not positive-definite");
      for (size_t i = p + 1; i < k; ++i) {
        Rational f = a[i][p] / a[p][p];
        for (size_t j = p; j < k; ++j) a[i][j] -= f * a[p][j];
      }
    }
  }

  QMatrix m_;
};

}  // namespace gitstrata
