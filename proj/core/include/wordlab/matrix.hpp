#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "wordlab/word.hpp"

namespace wordlab {

using BigInt = mpz_class;

// 2x2 matrix over the integers, exact.
struct Matrix2 {
  BigInt a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static Matrix2 identity() { return {}; }
  static Matrix2 of(long a, long b, long c, long d) { return {a, b, c, d}; }

  BigInt det() const { return a * d - b * c; }
  bool unimodular() const;
  // Requires det = +-1.
  Matrix2 inverse() const;
  std::string format() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

Matrix2 pow(const Matrix2& m, Exponent n);

// Generator index -> matrix of determinant +-1.
class MatrixAssignment {
 public:
  // Throws DomainError if `m` is not invertible over the integers.
  void assign(GenIndex g, Matrix2 m);
  const Matrix2* find(GenIndex g) const;

 private:
  std::map<GenIndex, Matrix2> images_;
};

// Image of w under the homomorphism induced by the assignment.
Matrix2 eval_matrix(const FreeWord& w, const MatrixAssignment& assignment);

}  // namespace wordlab
