#include "wordlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow");
  return r;
}

Exponent checked_neg(Exponent a) { return checked_mul(a, -1); }

// Pushes one run onto a reduced stack, keeping it reduced.
void push_run(std::vector<Run>& stack, Run r) {
  if (r.exp == 0) return;
  if (!stack.empty() && stack.back().gen == r.gen) {
    stack.back().exp = checked_add(stack.back().exp, r.exp);
    if (stack.back().exp == 0) stack.pop_back();
  } else {
    stack.push_back(r);
  }
}

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw AlphabetMismatch();
}

}  // namespace

// --- Alphabet ---------------------------------------------------------------

bool Alphabet::is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (GenIndex i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  if (names.empty()) throw DomainError("alphabet must have at least one generator");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw DomainError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate generator name '" + n + "'");
  }
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(names)));
}

std::optional<GenIndex> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// --- FreeWord ---------------------------------------------------------------

FreeWord::FreeWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

FreeWord::FreeWord(AlphabetPtr alphabet, std::vector<Run> runs)
    : alphabet_(std::move(alphabet)), runs_(std::move(runs)) {}

FreeWord FreeWord::from_runs(AlphabetPtr alphabet, std::span<const Run> runs) {
  std::vector<Run> stack;
  stack.reserve(runs.size());
  for (const Run& r : runs) {
    if (r.gen >= alphabet->rank()) throw DomainError("generator index out of range");
    push_run(stack, r);
  }
  return FreeWord(std::move(alphabet), std::move(stack));
}

FreeWord FreeWord::generator(AlphabetPtr alphabet, GenIndex g, Exponent e) {
  const Run r{g, e};
  return from_runs(std::move(alphabet), std::span<const Run>(&r, 1));
}

FreeWord FreeWord::from_letters(AlphabetPtr alphabet, std::span<const Letter> letters) {
  std::vector<Run> runs;
  runs.reserve(letters.size());
  for (const Letter& l : letters) runs.push_back({l.gen, l.inverse ? -1 : 1});
  return from_runs(std::move(alphabet), runs);
}

std::uint64_t FreeWord::letter_length() const {
  std::uint64_t n = 0;
  for (const Run& r : runs_) n += static_cast<std::uint64_t>(r.exp < 0 ? -r.exp : r.exp);
  return n;
}

std::vector<Letter> FreeWord::letters() const {
  std::vector<Letter> out;
  out.reserve(letter_length());
  for (const Run& r : runs_) {
    const Letter l{r.gen, r.exp < 0};
    for (Exponent k = 0; k < (r.exp < 0 ? -r.exp : r.exp); ++k) out.push_back(l);
  }
  return out;
}

std::string FreeWord::format() const {
  if (runs_.empty()) return "1";
  std::string out;
  for (const Run& r : runs_) {
    if (!out.empty()) out += ' ';
    out += alphabet_->name(r.gen);
    if (r.exp != 1) out += "^" + std::to_string(r.exp);
  }
  return out;
}

bool FreeWord::operator==(const FreeWord& other) const {
  return runs_ == other.runs_ && same_alphabet(alphabet_, other.alphabet_);
}

// --- group operations -------------------------------------------------------

FreeWord reduce(const AlphabetPtr& alphabet, std::span<const Run> runs) {
  return FreeWord::from_runs(alphabet, runs);
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  require_same(u.alphabet(), v.alphabet());
  std::vector<Run> runs;
  runs.reserve(u.runs().size() + v.runs().size());
  runs.insert(runs.end(), u.runs().begin(), u.runs().end());
  runs.insert(runs.end(), v.runs().begin(), v.runs().end());
  return FreeWord::from_runs(u.alphabet(), runs);
}

FreeWord concat(std::span<const FreeWord> words) {
  if (words.empty()) throw DomainError("concat of an empty list needs an alphabet");
  std::vector<Run> runs;
  for (const FreeWord& w : words) {
    require_same(words.front().alphabet(), w.alphabet());
    runs.insert(runs.end(), w.runs().begin(), w.runs().end());
  }
  return FreeWord::from_runs(words.front().alphabet(), runs);
}

FreeWord invert(const FreeWord& w) {
  std::vector<Run> runs;
  runs.reserve(w.runs().size());
  for (auto it = w.runs().rbegin(); it != w.runs().rend(); ++it)
    runs.push_back({it->gen, checked_neg(it->exp)});
  return FreeWord::from_runs(w.alphabet(), runs);
}

FreeWord power(const FreeWord& w, std::int64_t n) {
  if (n == 0 || w.is_neutral()) return FreeWord(w.alphabet());
  const FreeWord base = n > 0 ? w : invert(w);
  const std::uint64_t count = n > 0 ? static_cast<std::uint64_t>(n)
                                    : static_cast<std::uint64_t>(-(n + 1)) + 1;
  // Repeat the cyclic core; only the core's ends can interact.
  auto [core, conj] = cyclic_reduce(base);
  if (core.runs().size() == 1) {
    const Run r{core.runs()[0].gen,
                checked_mul(core.runs()[0].exp, static_cast<Exponent>(count))};
    std::vector<Run> runs(conj.runs());
    runs.push_back(r);
    const FreeWord ci = invert(conj);
    runs.insert(runs.end(), ci.runs().begin(), ci.runs().end());
    return FreeWord::from_runs(w.alphabet(), runs);
  }
  std::vector<Run> runs;
  runs.reserve(conj.runs().size() * 2 + core.runs().size() * count);
  runs.insert(runs.end(), conj.runs().begin(), conj.runs().end());
  for (std::uint64_t i = 0; i < count; ++i)
    runs.insert(runs.end(), core.runs().begin(), core.runs().end());
  const FreeWord ci = invert(conj);
  runs.insert(runs.end(), ci.runs().begin(), ci.runs().end());
  return FreeWord::from_runs(w.alphabet(), runs);
}

FreeWord commutator(const FreeWord& x, const FreeWord& y) {
  require_same(x.alphabet(), y.alphabet());
  const FreeWord parts[] = {invert(x), invert(y), x, y};
  return concat(parts);
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  std::vector<Run> runs = w.runs();
  std::vector<Run> conj;
  std::size_t lo = 0;
  std::size_t hi = runs.size();  // core is runs[lo, hi)
  // Peel g^k ... g^-k from both ends while the end letters are mutually inverse.
  while (hi > lo + 1 && runs[lo].gen == runs[hi - 1].gen &&
         (runs[lo].exp > 0) != (runs[hi - 1].exp > 0)) {
    Run& head = runs[lo];
    Run& tail = runs[hi - 1];
    const Exponent take = std::min(head.exp < 0 ? -head.exp : head.exp,
                                   tail.exp < 0 ? -tail.exp : tail.exp);
    const Exponent step = head.exp > 0 ? take : -take;
    conj.push_back({head.gen, step});
    head.exp -= step;
    tail.exp += step;
    if (head.exp == 0) ++lo;
    if (tail.exp == 0) --hi;
  }
  const std::span<const Run> core(runs.data() + lo, hi - lo);
  return {FreeWord::from_runs(w.alphabet(), core), FreeWord::from_runs(w.alphabet(), conj)};
}

ExponentVector abelianize(const FreeWord& w) {
  ExponentVector v(w.alphabet()->rank(), 0);
  for (const Run& r : w.runs()) v[r.gen] = checked_add(v[r.gen], r.exp);
  return v;
}

bool is_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](Exponent e) { return e == 0; });
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  if (images.size() != w.alphabet()->rank())
    throw DomainError("substitution needs one image per generator");
  const AlphabetPtr& target = images.front().alphabet();
  std::vector<FreeWord> inverses;
  inverses.reserve(images.size());
  for (const FreeWord& img : images) {
    require_same(target, img.alphabet());
    inverses.push_back(invert(img));
  }
  std::vector<Run> stack;
  for (const Run& r : w.runs()) {
    const FreeWord& piece = r.exp > 0 ? images[r.gen] : inverses[r.gen];
    const Exponent reps = r.exp > 0 ? r.exp : -r.exp;
    for (Exponent k = 0; k < reps; ++k)
      for (const Run& pr : piece.runs()) push_run(stack, pr);
  }
  return FreeWord::from_runs(target, stack);
}

}  // namespace wordlab
