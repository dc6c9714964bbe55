#include "wordlab/free_product.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw DomainError("empty generator name in split");
    names.emplace_back(item);
    start = end + 1;
  }
  return names;
}

std::pair<std::vector<std::string>, std::vector<std::string>> split_sides(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw DomainError("split must have the form 'a1,a2|b1,b2'");
  return {split_names(text.substr(0, bar)), split_names(text.substr(bar + 1))};
}

// Syllables are maximal blocks of runs whose generators lie in one part. Since the
// input is reduced, each block is itself a reduced non-neutral word.
template <typename Fn>
void for_each_block(const FreeWord& w, const Split& split, Fn&& fn) {
  const auto& runs = w.runs();
  std::size_t i = 0;
  while (i < runs.size()) {
    const Part p = split.part(runs[i].gen);
    std::size_t j = i + 1;
    while (j < runs.size() && split.part(runs[j].gen) == p) ++j;
    fn(p, std::span<const Run>(runs.data() + i, j - i));
    i = j;
  }
}

bool same_runs(std::span<const Run> a, const std::vector<Run>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

Split::Split(AlphabetPtr alphabet, std::vector<Part> parts)
    : alphabet_(std::move(alphabet)), parts_(std::move(parts)) {
  if (parts_.size() != alphabet_->rank()) throw DomainError("split must label every generator");
  bool has_a = false, has_b = false;
  for (Part p : parts_) (p == Part::A ? has_a : has_b) = true;
  if (!has_a || !has_b) throw DomainError("both parts of a split must be non-empty");
}

Split Split::parse(std::string_view text, const AlphabetPtr& alphabet) {
  auto [a_names, b_names] = split_sides(text);
  std::vector<std::optional<Part>> labels(alphabet->rank());
  auto mark = [&](const std::vector<std::string>& names, Part p) {
    for (const auto& n : names) {
      const auto g = alphabet->find(n);
      if (!g) throw UnknownGenerator("split names unknown generator '" + n + "'");
      if (labels[*g]) throw DomainError("generator '" + n + "' listed twice in split");
      labels[*g] = p;
    }
  };
  mark(a_names, Part::A);
  mark(b_names, Part::B);
  std::vector<Part> parts;
  for (GenIndex g = 0; g < labels.size(); ++g) {
    if (!labels[g]) throw DomainError("generator '" + alphabet->name(g) + "' missing from split");
    parts.push_back(*labels[g]);
  }
  return Split(alphabet, std::move(parts));
}

Split Split::parse(std::string_view text) {
  auto [a_names, b_names] = split_sides(text);
  std::vector<std::string> names = a_names;
  names.insert(names.end(), b_names.begin(), b_names.end());
  std::vector<Part> parts(a_names.size(), Part::A);
  parts.resize(names.size(), Part::B);
  return Split(Alphabet::make(std::move(names)), std::move(parts));
}

std::string Split::format() const {
  std::string a, b;
  for (GenIndex g = 0; g < parts_.size(); ++g) {
    std::string& side = parts_[g] == Part::A ? a : b;
    if (!side.empty()) side += ',';
    side += alphabet_->name(g);
  }
  return a + "|" + b;
}

std::optional<Part> Split::part_of(const FreeWord& w) const {
  if (w.is_neutral()) return std::nullopt;
  const Part p = part(w.runs().front().gen);
  for (const Run& r : w.runs())
    if (part(r.gen) != p) return std::nullopt;
  return p;
}

SyllableForm syllables(const FreeWord& w, const Split& split) {
  if (!same_alphabet(w.alphabet(), split.alphabet())) throw AlphabetMismatch();
  SyllableForm form;
  for_each_block(w, split, [&](Part p, std::span<const Run> block) {
    form.push_back({p, FreeWord::from_runs(w.alphabet(), block)});
  });
  return form;
}

namespace {

void check_b(const Split& split, const FreeWord& b) {
  if (!same_alphabet(b.alphabet(), split.alphabet())) throw AlphabetMismatch();
  if (b.is_neutral()) throw DomainError("weight element b must be non-neutral");
  if (!split.part_of(b)) throw DomainError("weight element b must lie in a single factor");
}

}  // namespace

Multiplicity multiplicity(const SyllableForm& form, const Split& split, const FreeWord& b) {
  check_b(split, b);
  const FreeWord binv = invert(b);
  Multiplicity m;
  for (const Syllable& s : form) {
    if (s.word == b) ++m.count_b;
    else if (s.word == binv) ++m.count_binv;
  }
  return m;
}

std::int64_t weight(const FreeWord& w, const Split& split, const FreeWord& b) {
  check_b(split, b);
  if (!same_alphabet(w.alphabet(), split.alphabet())) throw AlphabetMismatch();
  // Compare blocks in place; long tower words have millions of syllables.
  const FreeWord binv = invert(b);
  std::int64_t total = 0;
  for_each_block(w, split, [&](Part, std::span<const Run> block) {
    if (same_runs(block, b.runs())) ++total;
    else if (same_runs(block, binv.runs())) --total;
  });
  return total;
}

}  // namespace wordlab
