#pragma once

#include <string>
#include <vector>

#include "wordlab/cl_bound.hpp"
#include "wordlab/word.hpp"

namespace wordlab::schreier {

// Reidemeister-Schreier rewriting for the commutator subgroup, i.e. the kernel of
// abelianization F -> Z^r. Cosets are exponent vectors; the transversal element of t
// is x_1^{t_1} x_2^{t_2} ... x_r^{t_r}.

// Schreier generator rep(t) * x_g * rep(t + e_g)^-1. Only nontrivial ones are produced,
// i.e. those where some generator after g has a nonzero exponent in t.
struct SchreierLetter {
  ExponentVector coset;
  GenIndex gen;

  bool operator==(const SchreierLetter&) const = default;
};

struct SignedLetter {
  SchreierLetter letter;
  int sign;  // +1 or -1

  bool operator==(const SignedLetter&) const = default;
};

FreeWord transversal(const AlphabetPtr& alphabet, const ExponentVector& coset);
bool is_trivial(const SchreierLetter& letter);
FreeWord letter_word(const AlphabetPtr& alphabet, const SchreierLetter& letter);

// Freely reduced sequence of Schreier generators spelling w.
// Throws InfiniteCommutatorLength if abelianize(w) != 0.
std::vector<SignedLetter> rewrite(const FreeWord& w);

FreeWord expand_letters(const AlphabetPtr& alphabet, const std::vector<SignedLetter>& letters);

// Maximal runs of letters (t, g), (t + e_g, g), ..., (t + (k-1) e_g, g) with one sign.
// Such a run multiplies out to rep(t) x_g^k rep(t + k e_g)^-1 = c [n^-1, x_g^-k] c^-1,
// where n is the part of rep(t) after x_g, so each run is a single commutator.
std::size_t chain_count(const std::vector<SignedLetter>& letters);

// chain_count(rewrite(w)), a sound upper bound on cl(w); infinite iff w is outside
// the commutator subgroup.
ClBound cl_upper_bound(const FreeWord& w);

// "(t1,...,tr) g s"
std::string format(const AlphabetPtr& alphabet, const SignedLetter& letter);

}  // namespace wordlab::schreier
