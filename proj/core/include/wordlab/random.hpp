#pragma once

#include <cstdint>
#include <random>

#include "wordlab/free_product.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// Seeded generator with platform-independent bounded draws (std distributions are not
// reproducible across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63U) != 0; }

 private:
  std::mt19937_64 engine_;
};

namespace gen {

// Freely reduced word with letter length uniform in [0, max_len].
FreeWord word(const AlphabetPtr& alphabet, Rng& rng, std::uint64_t max_len);

// Non-neutral reduced word, letter length in [1, max_len].
FreeWord nonneutral_word(const AlphabetPtr& alphabet, Rng& rng, std::uint64_t max_len);

// Word in the free product built from random syllables; each syllable is drawn from
// part-local words and, with probability 1/3, is b or b^-1 exactly, so that the
// weight function sees many hits. The result is reduced and has length <= max_len.
FreeWord product_word(const Split& split, const FreeWord& b, Rng& rng, std::uint64_t max_len);

// Random non-neutral element of one factor, letter length <= max_len.
FreeWord factor_word(const Split& split, Part part, Rng& rng, std::uint64_t max_len);

// Commutator-subgroup word: a random multiset of letters followed by a shuffle
// of their inverses, reduced; letter length <= max_len.
FreeWord kernel_word(const AlphabetPtr& alphabet, Rng& rng, std::uint64_t max_len);

}  // namespace gen
}  // namespace wordlab
