#include "wordlab/random.hpp"

#include <algorithm>

#include "wordlab/error.hpp"

namespace wordlab {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % n);
}

namespace gen {

namespace {

Letter random_letter(std::size_t rank, Rng& rng) {
  return {static_cast<GenIndex>(rng.uniform(0, static_cast<std::int64_t>(rank) - 1)), rng.coin()};
}

// Reduced letter sequence of exactly `len` letters drawn from `gens`.
std::vector<Letter> reduced_letters(const std::vector<GenIndex>& gens, Rng& rng, std::uint64_t len) {
  std::vector<Letter> out;
  out.reserve(len);
  while (out.size() < len) {
    const Letter l{gens[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1))],
                   rng.coin()};
    if (!out.empty() && out.back() == l.inverted()) continue;
    out.push_back(l);
  }
  return out;
}

std::vector<GenIndex> all_gens(std::size_t rank) {
  std::vector<GenIndex> g(rank);
  for (GenIndex i = 0; i < rank; ++i) g[i] = i;
  return g;
}

std::vector<GenIndex> part_gens(const Split& split, Part p) {
  std::vector<GenIndex> g;
  for (GenIndex i = 0; i < split.alphabet()->rank(); ++i)
    if (split.part(i) == p) g.push_back(i);
  return g;
}

}  // namespace

FreeWord word(const AlphabetPtr& alphabet, Rng& rng, std::uint64_t max_len) {
  const auto len = static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(max_len)));
  return FreeWord::from_letters(alphabet, reduced_letters(all_gens(alphabet->rank()), rng, len));
}

FreeWord nonneutral_word(const AlphabetPtr& alphabet, Rng& rng, std::uint64_t max_len) {
  if (max_len == 0) throw DomainError("non-neutral word needs max_len >= 1");
  const auto len = static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(max_len)));
  return FreeWord::from_letters(alphabet, reduced_letters(all_gens(alphabet->rank()), rng, len));
}

FreeWord factor_word(const Split& split, Part part, Rng& rng, std::uint64_t max_len) {
  if (max_len == 0) throw DomainError("factor word needs max_len >= 1");
  const auto len = static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(max_len)));
  return FreeWord::from_letters(split.alphabet(), reduced_letters(part_gens(split, part), rng, len));
}

FreeWord product_word(const Split& split, const FreeWord& b, Rng& rng, std::uint64_t max_len) {
  const auto target = static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(max_len)));
  const auto bpart = split.part_of(b);
  const FreeWord binv = invert(b);
  std::vector<Run> runs;
  std::uint64_t len = 0;
  Part p = rng.coin() ? Part::A : Part::B;
  while (true) {
    FreeWord syl(split.alphabet());
    if (bpart && *bpart == p && rng.uniform(0, 2) == 0) syl = rng.coin() ? b : binv;
    else syl = factor_word(split, p, rng, 4);
    if (len + syl.letter_length() > target) break;
    len += syl.letter_length();
    runs.insert(runs.end(), syl.runs().begin(), syl.runs().end());
    p = other(p);
  }
  return FreeWord::from_runs(split.alphabet(), runs);
}

FreeWord kernel_word(const AlphabetPtr& alphabet, Rng& rng, std::uint64_t max_len) {
  const auto half = static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(max_len / 2)));
  std::vector<Letter> letters;
  letters.reserve(2 * half);
  for (std::uint64_t i = 0; i < half; ++i) letters.push_back(random_letter(alphabet->rank(), rng));
  std::vector<Letter> back;
  back.reserve(half);
  for (const Letter& l : letters) back.push_back(l.inverted());
  // Fisher-Yates with our own draws.
  for (std::size_t i = back.size(); i > 1; --i)
    std::swap(back[i - 1], back[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  letters.insert(letters.end(), back.begin(), back.end());
  return FreeWord::from_letters(alphabet, letters);
}

}  // namespace gen
}  // namespace wordlab
