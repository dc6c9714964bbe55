#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

enum class Part : std::uint8_t { A, B };

inline Part other(Part p) { return p == Part::A ? Part::B : Part::A; }
inline char label(Part p) { return p == Part::A ? 'A' : 'B'; }

// Assignment of every generator to one of two free factors.
class Split {
 public:
  // Both parts must be non-empty.
  Split(AlphabetPtr alphabet, std::vector<Part> parts);

  // "a1,a2|b1,b2" over an existing alphabet; every generator must be listed once.
  static Split parse(std::string_view text, const AlphabetPtr& alphabet);
  // Same notation; the alphabet is the A names followed by the B names.
  static Split parse(std::string_view text);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  Part part(GenIndex g) const { return parts_.at(g); }
  std::string format() const;

  // The part w lies in, or nullopt if w is neutral or uses both parts.
  std::optional<Part> part_of(const FreeWord& w) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Part> parts_;
};

struct Syllable {
  Part part;
  FreeWord word;

  bool operator==(const Syllable&) const = default;
};

// Alternating factorization; empty for the neutral word.
using SyllableForm = std::vector<Syllable>;

SyllableForm syllables(const FreeWord& w, const Split& split);

struct Multiplicity {
  std::uint64_t count_b = 0;
  std::uint64_t count_binv = 0;
};

// Counts syllables exactly equal to b and to b^-1. b must be non-neutral and lie in one part.
Multiplicity multiplicity(const SyllableForm& form, const Split& split, const FreeWord& b);

// Rhemtulla weight w_b: count_b - count_binv.
std::int64_t weight(const FreeWord& w, const Split& split, const FreeWord& b);

}  // namespace wordlab
