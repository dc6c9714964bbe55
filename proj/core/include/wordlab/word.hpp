#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordlab {

using GenIndex = std::uint32_t;
using Exponent = std::int64_t;

// Ordered set of generator names. Shared between words via AlphabetPtr.
class Alphabet {
 public:
  // Throws DomainError on empty, duplicate or malformed names.
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(GenIndex g) const { return names_.at(g); }
  std::optional<GenIndex> find(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  static bool is_identifier(std::string_view s);

 private:
  explicit Alphabet(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, GenIndex> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Run {
  GenIndex gen;
  Exponent exp;

  bool operator==(const Run&) const = default;
};

// One letter g^{+1} or g^{-1}.
struct Letter {
  GenIndex gen;
  bool inverse;

  Letter inverted() const { return {gen, !inverse}; }
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in run-length form: adjacent runs have distinct generators and
// every exponent is nonzero. The empty run sequence is the neutral element.
class FreeWord {
 public:
  explicit FreeWord(AlphabetPtr alphabet);

  // Reduces `runs` with a left-to-right stack scan.
  static FreeWord from_runs(AlphabetPtr alphabet, std::span<const Run> runs);
  static FreeWord generator(AlphabetPtr alphabet, GenIndex g, Exponent e = 1);
  static FreeWord from_letters(AlphabetPtr alphabet, std::span<const Letter> letters);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool is_neutral() const noexcept { return runs_.empty(); }

  // Sum of |exponent| over runs.
  std::uint64_t letter_length() const;
  std::vector<Letter> letters() const;

  // Canonical text; the neutral word prints as "1".
  std::string format() const;

  bool operator==(const FreeWord& other) const;

 private:
  FreeWord(AlphabetPtr alphabet, std::vector<Run> runs);

  AlphabetPtr alphabet_;
  std::vector<Run> runs_;
};

using ExponentVector = std::vector<Exponent>;

FreeWord reduce(const AlphabetPtr& alphabet, std::span<const Run> runs);
FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord concat(std::span<const FreeWord> words);
FreeWord invert(const FreeWord& w);
FreeWord power(const FreeWord& w, std::int64_t n);
// x^-1 y^-1 x y
FreeWord commutator(const FreeWord& x, const FreeWord& y);

struct CyclicReduction {
  FreeWord core;
  FreeWord conjugator;
};
// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const FreeWord& w);

ExponentVector abelianize(const FreeWord& w);
bool is_zero(const ExponentVector& v);

// Substitute the image of every generator and reduce. `images` is indexed by the
// generator index of w's alphabet; all images must share one alphabet.
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images);

// Grammar:
//   word := term+            (terms separated by whitespace or '*')
//   term := gen ['^' int] | '1' | '[' word ',' word ']' ['^' int] | '(' word ')' ['^' int]
FreeWord parse(std::string_view text, const AlphabetPtr& alphabet);
// Alphabet made of the generators in first-appearance order.
FreeWord parse(std::string_view text);
// Generator names in first-appearance order.
std::vector<std::string> scan_generators(std::string_view text);

}  // namespace wordlab
