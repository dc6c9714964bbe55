#include <cctype>
#include <charconv>
#include <unordered_set>

#include "wordlab/error.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& alphabet)
      : text_(text), alphabet_(alphabet) {}

  FreeWord run() {
    FreeWord w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  bool at_term_start() {
    skip_separators();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return ident_start(c) || c == '[' || c == '(' || c == '1';
  }

  FreeWord word() {
    if (!at_term_start()) fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
    std::vector<FreeWord> terms;
    while (at_term_start()) terms.push_back(term());
    return concat(terms);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Exponent integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("exponent out of range");
    }
    if (value == 0) {
      pos_ = start;
      fail("exponent must be nonzero");
    }
    return value;
  }

  FreeWord maybe_power(FreeWord base) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return power(base, integer());
    }
    return base;
  }

  FreeWord term() {
    skip_separators();
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      FreeWord x = word();
      expect(',');
      FreeWord y = word();
      expect(']');
      return maybe_power(commutator(x, y));
    }
    if (c == '(') {
      ++pos_;
      FreeWord inner = word();
      expect(')');
      return maybe_power(std::move(inner));
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && ident_char(text_[pos_])) fail("malformed neutral element '1'");
      return maybe_power(FreeWord(alphabet_));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto g = alphabet_->find(name);
    if (!g) throw UnknownGenerator("unknown generator '" + std::string(name) + "' at position " +
                                   std::to_string(start));
    return maybe_power(FreeWord::generator(alphabet_, *g));
  }

  std::string_view text_;
  const AlphabetPtr& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord parse(std::string_view text, const AlphabetPtr& alphabet) {
  return Parser(text, alphabet).run();
}

std::vector<std::string> scan_generators(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_set<std::string> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      const std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (seen.insert(name).second) names.push_back(std::move(name));
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return names;
}

FreeWord parse(std::string_view text) {
  auto names = scan_generators(text);
  if (names.empty()) {
    // A word with no generators can only be the neutral element; give it a
    // placeholder alphabet so the result is still a valid FreeWord.
    names.push_back("a");
  }
  return parse(text, Alphabet::make(std::move(names)));
}

}  // namespace wordlab
