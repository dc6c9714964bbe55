#include "wordlab/tower.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "wordlab/commutator.hpp"
#include "wordlab/magnus.hpp"
#include "wordlab/matrix.hpp"
#include "wordlab/schreier.hpp"

namespace wordlab::tower {

const AlphabetPtr& alphabet() {
  static const AlphabetPtr a = Alphabet::make({"x1", "x2", "x3", "x4"});
  return a;
}

const Split& split() {
  static const Split s(alphabet(), {Part::A, Part::A, Part::B, Part::B});
  return s;
}

namespace {

FreeWord x(GenIndex g, Exponent e = 1) { return FreeWord::generator(alphabet(), g, e); }

const std::vector<FreeWord>& images() {
  static const std::vector<FreeWord> imgs = {
      commutator(x(0), x(1)), commutator(x(0, 2), x(1, 2)),
      commutator(x(2), x(3)), commutator(x(2, 2), x(3, 2))};
  return imgs;
}

}  // namespace

FreeWord substitute(const FreeWord& w) {
  if (!same_alphabet(w.alphabet(), alphabet())) throw AlphabetMismatch();
  return wordlab::substitute(w, images());
}

FreeWord expand_to_base(std::uint64_t n, unsigned i) {
  if (n == 0) throw DomainError("tower stages are numbered from 1");
  if (i < 1 || i > 4) throw DomainError("tower generator index must be 1..4");
  FreeWord w = x(i - 1);
  for (std::uint64_t k = 1; k < n; ++k) w = substitute(w);
  return w;
}

Matrix4 bonding_abelianization() {
  Matrix4 m{};
  for (GenIndex col = 0; col < 4; ++col) {
    const ExponentVector v = abelianize(substitute(x(col)));
    for (std::size_t row = 0; row < 4; ++row) m[row][col] = v[row];
  }
  return m;
}

std::size_t colimit_rank(const Matrix4& m, std::size_t stages) {
  using Big = std::array<std::array<BigInt, 4>, 4>;
  Big t{}, acc{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      t[r][c] = BigInt(static_cast<long>(m[c][r]));
      acc[r][c] = r == c ? 1 : 0;
    }
  for (std::size_t s = 0; s < stages; ++s) {
    Big next{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        BigInt sum = 0;
        for (std::size_t k = 0; k < 4; ++k) sum += t[r][k] * acc[k][c];
        next[r][c] = sum;
      }
    acc = next;
  }
  // Fraction-free elimination.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 4 && rank < 4; ++col) {
    std::size_t pivot = rank;
    while (pivot < 4 && acc[pivot][col] == 0) ++pivot;
    if (pivot == 4) continue;
    std::swap(acc[pivot], acc[rank]);
    for (std::size_t r = rank + 1; r < 4; ++r) {
      const BigInt f = acc[r][col];
      for (std::size_t c = 0; c < 4; ++c) acc[r][c] = acc[r][c] * acc[rank][col] - f * acc[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t cech_colimit_rank(std::size_t stages) {
  if (stages == 0) throw DomainError("colimit needs at least one stage");
  return colimit_rank(bonding_abelianization(), stages);
}

std::uint64_t find_m(std::uint64_t n, std::size_t cap) {
  std::size_t deepest = 0;
  for (unsigned i : {1U, 3U}) {
    const auto r = magnus::lcs_degree(expand_to_base(n, i), cap);
    if (!r.degree) throw ExceedsCap(cap);
    deepest = std::max(deepest, *r.degree);
  }
  return deepest + 1;
}

std::uint64_t choose_L(std::uint64_t K_hat, std::uint64_t n) {
  const std::uint64_t target = 2 * K_hat + n;
  return target == 0 ? 1 : 6 * target - 1;
}

bool Certificate::passed() const {
  return !stages.empty() &&
         std::all_of(stages.begin(), stages.end(), [](const StageRecord& s) { return s.passed; });
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("WORDLAB_BUDGET");
  if (!raw || !*raw) return kDefaultBudget;
  std::uint64_t v = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc() || ptr != end || v == 0)
    throw DomainError("WORDLAB_BUDGET must be a positive integer");
  return v;
}

FreeWord first_loop() { return commutator(x(0), x(2)); }

std::uint64_t k_hat(const std::vector<FreeWord>& loops) {
  const std::size_t k = loops.size();
  std::vector<FreeWord> inverses;
  for (const FreeWord& g : loops) inverses.push_back(invert(g));
  std::vector<int> eps(k, -1);
  std::uint64_t best = 0;
  while (true) {
    std::vector<FreeWord> factors{FreeWord(alphabet())};
    for (std::size_t i = 0; i < k; ++i) {
      if (eps[i] == 1) factors.push_back(loops[i]);
      else if (eps[i] == -1) factors.push_back(inverses[i]);
    }
    const ClBound ub = schreier::cl_upper_bound(concat(factors));
    best = std::max(best, ub.value());  // products of kernel words stay in the kernel
    std::size_t i = 0;
    while (i < k && eps[i] == 1) eps[i++] = -1;
    if (i == k) break;
    ++eps[i];
  }
  return best;
}

StageRecord certify_stage(std::uint64_t n, const FreeWord& alpha, const FreeWord& beta,
                          std::uint64_t K_hat, std::uint64_t budget, FreeWord* g_out) {
  StageRecord rec;
  rec.n = n;
  rec.alpha = alpha;
  rec.beta = beta;
  rec.K_hat = K_hat;
  rec.L = choose_L(K_hat, n);
  const FreeWord c = commutator(concat(alpha, beta), concat(beta, alpha));
  const std::uint64_t needed = c.letter_length() * rec.L;
  if (needed > budget) throw BudgetExceeded(n, needed, budget, Certificate{});
  const FreeWord g = power(c, static_cast<std::int64_t>(rec.L));
  rec.word_length = g.letter_length();
  rec.weight = weight(g, split(), beta);
  rec.lower_bound = cl_lower_bound(g, split(), beta);
  rec.slack = static_cast<std::int64_t>(rec.lower_bound) - static_cast<std::int64_t>(2 * K_hat + n);
  rec.passed = rec.slack >= 1 && rec.weight == -2 * static_cast<std::int64_t>(rec.L);
  if (g_out) *g_out = g;
  return rec;
}

Certificate build_certificate(std::uint64_t n_max, const Options& options) {
  if (n_max == 0) throw DomainError("certificate needs n_max >= 1");
  Certificate cert;
  std::vector<FreeWord> loops{first_loop()};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const FreeWord alpha = expand_to_base(n, 1);
    const FreeWord beta = expand_to_base(n, 3);
    const std::uint64_t m_n = find_m(n, options.magnus_cap);
    const std::vector<FreeWord> previous(loops.begin(),
                                         loops.begin() + static_cast<std::ptrdiff_t>(n - 1));
    const std::uint64_t K = k_hat(previous);
    FreeWord g(alphabet());
    StageRecord rec;
    try {
      rec = certify_stage(n, alpha, beta, K, options.budget, &g);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(n, e.needed(), options.budget, cert);
    }
    rec.m_n = m_n;
    cert.stages.push_back(std::move(rec));
    if (n >= 2) loops.push_back(std::move(g));
  }
  return cert;
}

}  // namespace wordlab::tower
