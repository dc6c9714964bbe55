#include "wordlab/commutator.hpp"

#include <algorithm>

#include "wordlab/error.hpp"
#include "wordlab/random.hpp"
#include "wordlab/schreier.hpp"

namespace wordlab {

std::uint64_t weight_bound(std::int64_t weight) {
  const std::uint64_t mag =
      weight < 0 ? static_cast<std::uint64_t>(-(weight + 1)) + 1 : static_cast<std::uint64_t>(weight);
  return (mag + 3 + 11) / 12;
}

std::uint64_t cl_lower_bound(const FreeWord& w, const Split& split, const FreeWord& b) {
  if (!is_zero(abelianize(w))) throw InfiniteCommutatorLength();
  const std::int64_t wt = weight(w, split, b);
  if (w.is_neutral()) return 0;
  return std::max<std::uint64_t>(1, weight_bound(wt));
}

bool is_commutator(const FreeWord& w) {
  if (w.is_neutral()) return true;
  if (!is_zero(abelianize(w))) return false;
  const std::vector<Letter> core = cyclic_reduce(w).core.letters();
  const std::size_t n = core.size();
  if (n % 2 != 0) return false;
  const std::size_t h = n / 2;
  for (std::size_t r = 0; r < n; ++r) {
    auto at = [&](std::size_t k) -> const Letter& { return core[(r + k) % n]; };
    // rotation = A B C A^-1 B^-1 C^-1 with |A| = p, |B| = q, |C| = h - p - q
    for (std::size_t p = 0; p <= h; ++p) {
      bool a_ok = true;
      for (std::size_t i = 0; i < p && a_ok; ++i) a_ok = at(h + i) == at(p - 1 - i).inverted();
      if (!a_ok) continue;
      for (std::size_t q = 0; p + q <= h; ++q) {
        bool ok = true;
        for (std::size_t i = 0; i < q && ok; ++i)
          ok = at(h + p + i) == at(p + q - 1 - i).inverted();
        const std::size_t s = h - p - q;
        for (std::size_t i = 0; i < s && ok; ++i)
          ok = at(h + p + q + i) == at(h - 1 - i).inverted();
        if (ok) return true;
      }
    }
  }
  return false;
}

ClBounds cl_bounds(const FreeWord& w, const Split& split, const FreeWord& b) {
  if (!is_zero(abelianize(w))) return {std::nullopt, ClBound::infinite()};
  const std::uint64_t lower = cl_lower_bound(w, split, b);
  ClBound upper = schreier::cl_upper_bound(w);
  if (!w.is_neutral() && upper.value() > 1 && w.letter_length() <= kWicksLetterLimit &&
      is_commutator(w))
    upper = ClBound::finite(1);
  return {lower, upper};
}

std::vector<SupRow> sup_divergence_table(std::uint64_t L_max, const Split& split,
                                         const FreeWord& a, const FreeWord& b) {
  const auto pa = split.part_of(a);
  const auto pb = split.part_of(b);
  if (!pa || !pb) throw DomainError("a and b must be non-neutral elements of single factors");
  if (*pa == *pb) throw DomainError("a and b must lie in opposite factors");
  const FreeWord c = commutator(concat(a, b), concat(b, a));
  std::vector<SupRow> rows;
  rows.reserve(L_max);
  FreeWord w(split.alphabet());
  for (std::uint64_t L = 1; L <= L_max; ++L) {
    w = concat(w, c);
    rows.push_back({L, weight(w, split, b), cl_lower_bound(w, split, b)});
  }
  return rows;
}

bool RemarkReport::passed() const {
  if (vacuous) return true;
  return free_control_differs && std::all_of(trials.begin(), trials.end(), [](const RemarkTrial& t) {
           return t.even_holds && t.odd_holds;
         });
}

namespace {

Matrix2 random_unimodular(Rng& rng) {
  Matrix2 m;
  const auto steps = rng.uniform(1, 4);
  for (std::int64_t i = 0; i < steps; ++i) {
    std::int64_t t = rng.uniform(-3, 2);
    if (t >= 0) ++t;  // t in [-3, 3] \ {0}
    m = m * (rng.coin() ? Matrix2::of(1, t, 0, 1) : Matrix2::of(1, 0, t, 1));
  }
  if (rng.coin()) m = m * Matrix2::of(1, 0, 0, -1);
  return m;
}

// Conjugate of a fixed involution, so that b^2 = 1.
Matrix2 random_involution(Rng& rng) {
  const Matrix2 j = rng.coin() ? Matrix2::of(1, 0, 0, -1) : Matrix2::of(0, 1, 1, 0);
  const Matrix2 p = random_unimodular(rng);
  return p * j * p.inverse();
}

}  // namespace

RemarkReport remark_identity_check(std::uint64_t n, std::uint64_t trials, std::uint64_t seed) {
  RemarkReport report;
  report.n = n;
  if (n == 0) {
    report.vacuous = true;
    return report;
  }
  const auto ab = Alphabet::make({"a", "b"});
  const FreeWord a = FreeWord::generator(ab, 0);
  const FreeWord b = FreeWord::generator(ab, 1);
  const FreeWord c = commutator(a, b);
  const auto m = static_cast<std::int64_t>(n);
  const FreeWord even_lhs = power(c, 2 * m);
  const FreeWord even_rhs = commutator(power(c, -m), b);
  const FreeWord odd_lhs = power(c, 2 * m + 1);
  const FreeWord odd_rhs = commutator(concat(a, power(c, -m)), b);

  report.free_control_differs = !concat(even_lhs, invert(even_rhs)).is_neutral();

  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    MatrixAssignment assignment;
    Matrix2 ma = random_unimodular(rng);
    Matrix2 mb = random_involution(rng);
    assignment.assign(0, ma);
    assignment.assign(1, mb);
    const bool even = eval_matrix(even_lhs, assignment) == eval_matrix(even_rhs, assignment);
    const bool odd = eval_matrix(odd_lhs, assignment) == eval_matrix(odd_rhs, assignment);
    report.trials.push_back({std::move(ma), std::move(mb), even, odd});
  }
  return report;
}

}  // namespace wordlab
