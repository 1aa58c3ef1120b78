#include "quasihom/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quasihom {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<RVector>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  Matrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw std::invalid_argument("columns of unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RVector Matrix::row(std::size_t i) const { return RVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

RVector Matrix::column(std::size_t j) const {
  RVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational Matrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

RVector operator*(const Matrix& a, const RVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << quasihom::to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Echelon row_reduce(const Matrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();

  // Clear denominators row by row; the row space is unchanged.
  std::vector<std::vector<Integer>> a(r, std::vector<Integer>(c));
  for (std::size_t i = 0; i < r; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }

  Integer prev = 1;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Integer t;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    const Integer& piv = a[row][col];
    for (std::size_t i = row + 1; i < r; ++i) {
      const Integer f = a[i][col];
      for (std::size_t j = col + 1; j < c; ++j) {
        t = piv * a[i][j];
        if (f != 0) t -= f * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }

  Echelon out{Matrix(pivots.size(), c), pivots};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Integer& piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < c; ++j) {
      if (a[i][j] == 0) continue;
      out.rref(i, j) = Rational(a[i][j], piv);
      out.rref(i, j).canonicalize();
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out.rref(k, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < c; ++j) {
        if (sgn(out.rref(i, j)) != 0) out.rref(k, j) -= f * out.rref(i, j);
      }
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<RVector> nullspace(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t c = m.cols();
  std::vector<bool> is_pivot(c, false);
  for (auto p : e.pivot_columns) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    RVector v(c);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivot_columns[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve(const Matrix& a, const RVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
  RVector x(a.cols());
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivot_columns[i]] = e.rref(i, a.cols());
  return x;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  }
  return inv;
}

CongruenceDiagonalization congruence_diagonalize(const Matrix& s) {
  if (!s.is_square() || s != s.transpose()) throw std::invalid_argument("congruence_diagonalize: not symmetric");
  const std::size_t n = s.rows();
  Matrix a = s;
  Matrix b = Matrix::identity(n);

  // Simultaneous row/column operation: column j += f * column i.
  auto add_multiple = [&](std::size_t j, std::size_t i, const Rational& f) {
    for (std::size_t k = 0; k < n; ++k) a(k, j) += f * a(k, i);
    for (std::size_t k = 0; k < n; ++k) a(j, k) += f * a(i, k);
    for (std::size_t k = 0; k < n; ++k) b(k, j) += f * b(k, i);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(b(k, i), b(k, j));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a(i, i)) == 0) {
      std::size_t j = i + 1;
      while (j < n && sgn(a(j, j)) == 0) ++j;
      if (j < n) {
        swap_index(i, j);
      } else {
        j = i + 1;
        while (j < n && sgn(a(i, j)) == 0) ++j;
        if (j == n) continue;
        add_multiple(i, j, Rational(1));
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      add_multiple(j, i, -a(i, j) / a(i, i));
    }
  }
  CongruenceDiagonalization out{b, RVector(n)};
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  return out;
}

Signature signature(const Matrix& symmetric) {
  Signature sig;
  for (const auto& d : congruence_diagonalize(symmetric).diagonal) {
    const int s = sgn(d);
    if (s > 0) {
      ++sig.positive;
    } else if (s < 0) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

std::size_t numeric_rank(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t c = rows.front().size();
  double scale = 0.0;
  for (const auto& r : rows) {
    for (double v : r) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < rows.size(); ++col) {
    std::size_t best = rank;
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (std::abs(rows[i][col]) > std::abs(rows[best][col])) best = i;
    }
    if (std::abs(rows[best][col]) <= tol * scale) continue;
    std::swap(rows[best], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const double f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < c; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace quasihom
