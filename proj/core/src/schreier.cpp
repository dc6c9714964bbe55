#include "wordlab/schreier.hpp"

#include "wordlab/error.hpp"

namespace wordlab::schreier {

FreeWord transversal(const AlphabetPtr& alphabet, const ExponentVector& coset) {
  std::vector<Run> runs;
  for (GenIndex g = 0; g < coset.size(); ++g) runs.push_back({g, coset[g]});
  return FreeWord::from_runs(alphabet, runs);
}

bool is_trivial(const SchreierLetter& letter) {
  for (std::size_t h = letter.gen + 1; h < letter.coset.size(); ++h)
    if (letter.coset[h] != 0) return false;
  return true;
}

FreeWord letter_word(const AlphabetPtr& alphabet, const SchreierLetter& letter) {
  ExponentVector next = letter.coset;
  next[letter.gen] += 1;
  const FreeWord parts[] = {transversal(alphabet, letter.coset),
                            FreeWord::generator(alphabet, letter.gen),
                            invert(transversal(alphabet, next))};
  return concat(parts);
}

std::vector<SignedLetter> rewrite(const FreeWord& w) {
  if (!is_zero(abelianize(w))) throw InfiniteCommutatorLength();
  ExponentVector coset(w.alphabet()->rank(), 0);
  std::vector<SignedLetter> out;
  auto emit = [&](GenIndex g, int sign) {
    SchreierLetter letter{coset, g};
    if (is_trivial(letter)) return;
    if (!out.empty() && out.back().sign == -sign && out.back().letter == letter) {
      out.pop_back();
      return;
    }
    out.push_back({std::move(letter), sign});
  };
  for (const Run& r : w.runs()) {
    const Exponent n = r.exp < 0 ? -r.exp : r.exp;
    for (Exponent k = 0; k < n; ++k) {
      if (r.exp > 0) {
        emit(r.gen, +1);
        ++coset[r.gen];
      } else {
        --coset[r.gen];
        emit(r.gen, -1);
      }
    }
  }
  return out;
}

FreeWord expand_letters(const AlphabetPtr& alphabet, const std::vector<SignedLetter>& letters) {
  std::vector<FreeWord> parts;
  parts.reserve(letters.size() + 1);
  parts.emplace_back(alphabet);
  for (const SignedLetter& l : letters) {
    FreeWord word = letter_word(alphabet, l.letter);
    parts.push_back(l.sign > 0 ? std::move(word) : invert(word));
  }
  return concat(parts);
}

std::size_t chain_count(const std::vector<SignedLetter>& letters) {
  std::size_t chains = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    bool continues = false;
    if (i > 0) {
      const SignedLetter& prev = letters[i - 1];
      const SignedLetter& cur = letters[i];
      if (prev.sign == cur.sign && prev.letter.gen == cur.letter.gen) {
        ExponentVector expected = prev.letter.coset;
        expected[cur.letter.gen] += cur.sign;
        continues = expected == cur.letter.coset;
      }
    }
    if (!continues) ++chains;
  }
  return chains;
}

ClBound cl_upper_bound(const FreeWord& w) {
  if (!is_zero(abelianize(w))) return ClBound::infinite();
  return ClBound::finite(chain_count(rewrite(w)));
}

std::string format(const AlphabetPtr& alphabet, const SignedLetter& letter) {
  std::string out = "(";
  for (std::size_t i = 0; i < letter.letter.coset.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letter.letter.coset[i]);
  }
  out += ") " + alphabet->name(letter.letter.gen) + " " + (letter.sign > 0 ? "+1" : "-1");
  return out;
}

}  // namespace wordlab::schreier
