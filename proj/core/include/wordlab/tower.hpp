#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/free_product.hpp"
#include "wordlab/word.hpp"

namespace wordlab::tower {

// Rank-4 base group on x1, x2, x3, x4 split as <x1,x2> * <x3,x4>.
const AlphabetPtr& alphabet();
const Split& split();

// x1 -> [x1,x2], x2 -> [x1^2,x2^2], x3 -> [x3,x4], x4 -> [x3^2,x4^2]
FreeWord substitute(const FreeWord& w);

// x_{n,i} written in the base group: the substitution applied n - 1 times to x_i.
// i is 1-based. Requires n >= 1.
FreeWord expand_to_base(std::uint64_t n, unsigned i);

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

// Column i is the abelianized image of x_i.
Matrix4 bonding_abelianization();

// Rank over the rationals of the composite of `stages` copies of m^T, i.e. of the
// direct limit of Z^4 -> Z^4 -> ... along the transposed map.
std::size_t colimit_rank(const Matrix4& m, std::size_t stages);
std::size_t cech_colimit_rank(std::size_t stages);

class ExceedsCap : public Error {
 public:
  explicit ExceedsCap(std::size_t cap)
      : Error("lcs degree not found below Magnus cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// Least m with x_{n,1} and x_{n,3} both outside F_m. Throws ExceedsCap.
std::uint64_t find_m(std::uint64_t n, std::size_t cap);

// Least L >= 1 with ceil((2L + 3) / 12) > 2 K_hat + n.
std::uint64_t choose_L(std::uint64_t K_hat, std::uint64_t n);

struct StageRecord {
  std::uint64_t n = 0;
  FreeWord alpha{alphabet()};
  FreeWord beta{alphabet()};
  std::uint64_t m_n = 0;
  std::uint64_t K_hat = 0;
  std::uint64_t L = 0;
  std::int64_t weight = 0;
  std::uint64_t lower_bound = 0;
  std::int64_t slack = 0;
  std::uint64_t word_length = 0;  // letters in g_n
  bool passed = false;
};

struct Certificate {
  std::vector<StageRecord> stages;
  bool passed() const;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Options {
  std::size_t magnus_cap = 8;
  std::uint64_t budget = kDefaultBudget;  // max letters in any g_n
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t n, std::uint64_t needed, std::uint64_t budget, Certificate partial)
      : Error("stage " + std::to_string(n) + " needs " + std::to_string(needed) +
              " letters, budget is " + std::to_string(budget)),
        stage_(n), needed_(needed), budget_(budget), partial_(std::move(partial)) {}
  std::uint64_t stage() const noexcept { return stage_; }
  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }
  const Certificate& partial() const noexcept { return partial_; }

 private:
  std::uint64_t stage_;
  std::uint64_t needed_;
  std::uint64_t budget_;
  Certificate partial_;
};

// Budget from WORDLAB_BUDGET if set, otherwise kDefaultBudget.
std::uint64_t budget_from_env();

// g_1 entering the K_hat products: the shortest mixed-part commutator [x1, x3].
FreeWord first_loop();

// Max of the Schreier upper bound over all products g_1^{e_1} ... g_k^{e_k},
// e_i in {-1, 0, 1}; zero for an empty list.
std::uint64_t k_hat(const std::vector<FreeWord>& loops);

// g_n = [alpha beta, beta alpha]^L with L = choose_L(K_hat, n); weight w.r.t. beta.
// Throws BudgetExceeded (with an empty partial) if g_n would exceed the budget.
StageRecord certify_stage(std::uint64_t n, const FreeWord& alpha, const FreeWord& beta,
                          std::uint64_t K_hat, std::uint64_t budget, FreeWord* g_out = nullptr);

Certificate build_certificate(std::uint64_t n_max, const Options& options = {});

}  // namespace wordlab::tower
