#pragma once

#include <stdexcept>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

// Dense exact-rational matrix, indexed from 1 to match box numbering.
class QMat {
 public:
  QMat() = default;
  explicit QMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int dim() const { return n_; }
  Rational& at(int i, int j) { return a_[idx(i, j)]; }
  const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  QMat operator+(const QMat& o) const {
    QMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  QMat operator-(const QMat& o) const {
    QMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  QMat operator*(const QMat& o) const {
    QMat r(n_);
    for (int i = 1; i <= n_; ++i)
      for (int k = 1; k <= n_; ++k) {
        const Rational& x = at(i, k);
        if (x == 0) continue;
        for (int j = 1; j <= n_; ++j) {
          const Rational& y = o.at(k, j);
          if (y != 0) r.at(i, j) += x * y;
        }
      }
    return r;
  }
  QMat operator*(const Rational& s) const {
    QMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }
  bool operator==(const QMat& o) const { return n_ == o.n_ && a_ == o.a_; }

  QMat transpose() const {
    QMat r(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Rational trace() const {
    Rational t = 0;
    for (int i = 1; i <= n_; ++i) t += at(i, i);
    return t;
  }

  bool is_diagonal() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j && at(i, j) != 0) return false;
    return true;
  }

  static QMat unit(int n, int i, int j) {
    QMat m(n);
    m.at(i, j) = 1;
    return m;
  }
  static QMat identity(int n) {
    QMat m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }

  // Inverse via Gauss-Jordan; throws on singular input.
  QMat inverse() const;

 private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("QMat index");
    return static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1);
  }

  int n_ = 0;
  std::vector<Rational> a_;
};

// Rank of a list of rational row vectors (destructive echelon form inside).
int rank_of_rows(std::vector<std::vector<Rational>> rows);

}  // namespace walg
