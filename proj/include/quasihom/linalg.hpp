#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quasihom/rational.hpp"

namespace quasihom {

using RVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<RVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RVector row(std::size_t i) const;
  RVector column(std::size_t j) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend RVector operator*(const Matrix& a, const RVector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
RVector operator*(const Matrix& a, const RVector& v);

/// Reduced row echelon form computed by fraction-free (Bareiss) elimination
/// over the integers, then normalized so every pivot is 1.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing column
/// order, with that free entry equal to 1.
std::vector<RVector> nullspace(const Matrix& m);

/// Some solution of a x = b, or empty when inconsistent.
std::optional<RVector> solve(const Matrix& a, const RVector& b);

Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Congruence diagonalization of a symmetric matrix: basis^T * s * basis = diag(diagonal).
struct CongruenceDiagonalization {
  Matrix basis;
  RVector diagonal;
};
CongruenceDiagonalization congruence_diagonalize(const Matrix& s);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const Matrix& symmetric);

/// Numerical rank by partial-pivot elimination with relative tolerance.
std::size_t numeric_rank(std::vector<std::vector<double>> rows, double tol = 1e-12);

}  // namespace quasihom
