#include "wordlab/matrix.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

bool Matrix2::unimodular() const {
  const BigInt dt = det();
  return dt == 1 || dt == -1;
}

Matrix2 Matrix2::inverse() const {
  const BigInt dt = det();
  if (dt != 1 && dt != -1) throw DomainError("matrix is not invertible over the integers");
  // 1/det == det when det is a unit.
  return {dt * d, -dt * b, -dt * c, dt * a};
}

std::string Matrix2::format() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 pow(const Matrix2& m, Exponent n) {
  Matrix2 base = n < 0 ? m.inverse() : m;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Matrix2 result;
  while (e) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

void MatrixAssignment::assign(GenIndex g, Matrix2 m) {
  if (!m.unimodular()) throw DomainError("assigned matrix must have determinant +-1");
  images_.insert_or_assign(g, std::move(m));
}

const Matrix2* MatrixAssignment::find(GenIndex g) const {
  auto it = images_.find(g);
  return it == images_.end() ? nullptr : &it->second;
}

Matrix2 eval_matrix(const FreeWord& w, const MatrixAssignment& assignment) {
  Matrix2 result;
  for (const Run& r : w.runs()) {
    const Matrix2* m = assignment.find(r.gen);
    if (!m) throw DomainError("generator '" + w.alphabet()->name(r.gen) + "' has no matrix");
    result = result * pow(*m, r.exp);
  }
  return result;
}

}  // namespace wordlab
