#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetample/rational.hpp"

namespace jetample {

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "dot product arity");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector arity");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector arity");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

// Dense exact matrix. Small sizes only; all elimination is fraction-exact.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, Vec(cols, Rational(0))) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(std::vector<Vec> rows) {
    Mat m;
    m.data_ = std::move(rows);
    m.rows_ = m.data_.size();
    m.cols_ = m.rows_ ? m.data_[0].size() : 0;
    for (const auto& r : m.data_) {
      require(r.size() == m.cols_, Errc::DimensionMismatch, "ragged matrix rows");
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const Vec& row(std::size_t i) const { return data_[i]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (data_[i][j] != data_[j][i]) return false;
      }
    }
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
    }
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    require(a.cols_ == b.rows_, Errc::DimensionMismatch, "matrix product shape");
    Mat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }

  Vec mul(const Vec& v) const {
    require(v.size() == cols_, Errc::DimensionMismatch, "matrix-vector shape");
    Vec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(data_[i], v);
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Mat submatrix(const std::vector<std::size_t>& row_idx,
                const std::vector<std::size_t>& col_idx) const {
    Mat out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = data_[row_idx[i]][col_idx[j]];
    }
    return out;
  }

  std::size_t rank() const {
    Mat m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t piv = r;
      while (piv < rows_ && m(piv, col) == 0) ++piv;
      if (piv == rows_) continue;
      std::swap(m.data_[piv], m.data_[r]);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, col) == 0) continue;
        Rational f = m(i, col) / m(r, col);
        for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      ++r;
    }
    return r;
  }

  // Unique solution of (this) x = b for square nonsingular systems.
  std::optional<Vec> solve(const Vec& b) const {
    require(rows_ == cols_ && b.size() == rows_, Errc::DimensionMismatch, "solve shape");
    Mat m = *this;
    Vec rhs = b;
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && m(piv, col) == 0) ++piv;
      if (piv == rows_) return std::nullopt;  // singular
      std::swap(m.data_[piv], m.data_[col]);
      std::swap(rhs[piv], rhs[col]);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == col || m(i, col) == 0) continue;
        Rational f = m(i, col) / m(col, col);
        for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
        rhs[i] -= f * rhs[col];
      }
    }
    Vec x(cols_);
    for (std::size_t i = 0; i < cols_; ++i) x[i] = rhs[i] / m(i, i);
    return x;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Vec> data_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::string str() const {
    return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," +
           std::to_string(zero) + ")";
  }
};

// Sylvester signature of a symmetric matrix by congruence diagonalization
// over Q. Exact; zero-diagonal blocks handled by the standard row+column
// addition trick.
inline Signature signature_of(const Mat& g) {
  require(g.is_symmetric(), Errc::Domain, "signature of a non-symmetric matrix");
  Mat m = g;
  std::size_t n = m.rows();
  auto add_row_col = [&m, n](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) m(dst, j) += f * m(src, j);
    for (std::size_t i = 0; i < n; ++i) m(i, dst) += f * m(i, src);
  };
  auto swap_row_col = [&m, n](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && m(j, j) == 0) ++j;
      if (j < n) {
        swap_row_col(k, j);
      } else {
        // All remaining diagonal entries vanish; find an off-diagonal entry.
        bool found = false;
        for (std::size_t a = k; a < n && !found; ++a) {
          for (std::size_t b = a + 1; b < n && !found; ++b) {
            if (m(a, b) != 0) {
              if (a != k) swap_row_col(a, k);
              add_row_col(k, b == k ? a : b, Rational(1));
              found = true;
            }
          }
        }
        if (!found) {
          sig.zero += n - k;
          return sig;
        }
      }
    }
    Rational piv = m(k, k);
    if (piv > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      add_row_col(i, k, -m(i, k) / piv);
    }
  }
  return sig;
}

inline bool is_negative_definite(const Mat& g) {
  if (g.rows() == 0) return true;
  Signature s = signature_of(g);
  return s.positive == 0 && s.zero == 0;
}

}  // namespace jetample
