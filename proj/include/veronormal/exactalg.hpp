#pragma once

// Exact rational scalars and dense matrices over them.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace veronormal {

// Arbitrary-precision rational. gmpxx keeps results canonical (lowest terms,
// positive denominator) after every arithmetic operation; values built from
// a raw numerator/denominator pair must go through make_rat().
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rat>& entries() const { return data_; }

  QMatrix transpose() const;
  QMatrix column(std::size_t c) const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rat& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::string to_string(const QMatrix& m);

struct RrefResult {
  QMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form. Within each column the pivot is the candidate
// entry of smallest bit size.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Basis of the right null space, each vector as a cols x 1 matrix.
// Free variables are set to 1 one at a time, so the basis is in the
// canonical form read off the reduced echelon matrix.
std::vector<QMatrix> kernel_basis(const QMatrix& m);

// Determinant of a square matrix by elimination.
Rat determinant(const QMatrix& m);

// Stack column vectors side by side.
QMatrix hstack(const std::vector<QMatrix>& columns, std::size_t height);

}  // namespace veronormal
