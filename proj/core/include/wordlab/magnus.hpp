#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/matrix.hpp"
#include "wordlab/word.hpp"

namespace wordlab::magnus {

// Sequence of variable indices; variable i stands for X_i in 1 + X_i.
using Monomial = std::vector<GenIndex>;

// Degree first, then lexicographic.
struct DegLex {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

// Non-commutative polynomial over the integers, truncated above degree `cap`.
// Zero coefficients are never stored.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, BigInt, DegLex>;

  TruncatedSeries(std::size_t variables, std::size_t cap);
  static TruncatedSeries one(std::size_t variables, std::size_t cap);

  std::size_t variables() const noexcept { return variables_; }
  std::size_t cap() const noexcept { return cap_; }
  const Terms& terms() const noexcept { return terms_; }

  BigInt coefficient(const Monomial& m) const;
  void add(const Monomial& m, const BigInt& c);

  // Least degree >= 1 carrying a nonzero coefficient.
  std::optional<std::size_t> lowest_degree() const;
  Terms homogeneous(std::size_t degree) const;

  // Right multiplication by (1 + X_g)^e, truncated.
  void multiply_generator_power(GenIndex g, Exponent e);

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);
  bool operator==(const TruncatedSeries& other) const = default;

  // One "coef monomial" line per term, degree-then-lex; monomials as names joined by '*'.
  std::string format(const Alphabet& alphabet) const;

 private:
  std::size_t variables_;
  std::size_t cap_;
  Terms terms_;
};

// Magnus embedding g -> 1 + X_g, g^-1 -> 1 - X_g + X_g^2 - ..., truncated at cap >= 1.
TruncatedSeries expand(const FreeWord& w, std::size_t cap);

struct LcsDegreeResult {
  std::optional<std::size_t> degree;  // absent: every degree up to cap_used vanished
  std::size_t cap_used;

  bool exceeds_cap() const noexcept { return !degree; }
};

// Least d with a nonzero degree-d term of expand(w) - 1, i.e. the largest n with
// w in F_n. Caps 2, 4, 8, ... up to `cap` are tried in turn. Throws on neutral w.
LcsDegreeResult lcs_degree(const FreeWord& w, std::size_t cap);

// w in F_n iff expand(w) == 1 modulo degree n. Requires 1 <= n <= cap + 1.
bool in_lower_central(const FreeWord& w, std::size_t n, std::size_t cap);

}  // namespace wordlab::magnus
