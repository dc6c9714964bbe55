#include "wordlab/magnus.hpp"

#include "wordlab/error.hpp"

namespace wordlab::magnus {

TruncatedSeries::TruncatedSeries(std::size_t variables, std::size_t cap)
    : variables_(variables), cap_(cap) {}

TruncatedSeries TruncatedSeries::one(std::size_t variables, std::size_t cap) {
  TruncatedSeries s(variables, cap);
  s.terms_.emplace(Monomial{}, BigInt(1));
  return s;
}

BigInt TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const BigInt& c) {
  if (m.size() > cap_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::size_t> TruncatedSeries::lowest_degree() const {
  for (const auto& [m, c] : terms_)
    if (!m.empty()) return m.size();  // DegLex order puts the lowest degree first
  return std::nullopt;
}

TruncatedSeries::Terms TruncatedSeries::homogeneous(std::size_t degree) const {
  Terms out;
  for (const auto& [m, c] : terms_)
    if (m.size() == degree) out.emplace(m, c);
  return out;
}

void TruncatedSeries::multiply_generator_power(GenIndex g, Exponent e) {
  // (1 + X)^e = sum_k binom(e, k) X^k; GMP's binomial accepts negative e with
  // binom(-m, k) = (-1)^k binom(m + k - 1, k).
  std::vector<BigInt> coeff(cap_ + 1);
  const BigInt top(static_cast<long>(e));
  for (std::size_t k = 0; k <= cap_; ++k) mpz_bin_ui(coeff[k].get_mpz_t(), top.get_mpz_t(), k);
  Terms next;
  BigInt product;
  for (const auto& [m, c] : terms_) {
    Monomial key = m;
    for (std::size_t k = 0; m.size() + k <= cap_; ++k) {
      if (k > 0) key.push_back(g);
      if (coeff[k] == 0) continue;
      product = c * coeff[k];
      auto [it, inserted] = next.try_emplace(key, product);
      if (!inserted) it->second += product;
    }
  }
  std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(next);
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
  if (x.variables_ != y.variables_) throw DomainError("series over different variable sets");
  TruncatedSeries out(x.variables_, std::min(x.cap_, y.cap_));
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      if (mx.size() + my.size() > out.cap_) break;  // DegLex: later terms are longer
      Monomial m = mx;
      m.insert(m.end(), my.begin(), my.end());
      out.add(m, cx * cy);
    }
  }
  return out;
}

std::string TruncatedSeries::format(const Alphabet& alphabet) const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    out += c.get_str();
    out += ' ';
    if (m.empty()) out += '1';
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += '*';
      out += alphabet.name(m[i]);
    }
    out += '\n';
  }
  return out;
}

TruncatedSeries expand(const FreeWord& w, std::size_t cap) {
  if (cap == 0) throw DomainError("Magnus truncation cap must be at least 1");
  TruncatedSeries s = TruncatedSeries::one(w.alphabet()->rank(), cap);
  for (const Run& r : w.runs()) s.multiply_generator_power(r.gen, r.exp);
  return s;
}

LcsDegreeResult lcs_degree(const FreeWord& w, std::size_t cap) {
  if (w.is_neutral()) throw DomainError("the neutral word lies in every term of the lower central series");
  if (cap == 0) throw DomainError("Magnus truncation cap must be at least 1");
  std::size_t c = std::min<std::size_t>(2, cap);
  while (true) {
    if (auto d = expand(w, c).lowest_degree()) return {d, c};
    if (c == cap) return {std::nullopt, cap};
    c = std::min(2 * c, cap);
  }
}

bool in_lower_central(const FreeWord& w, std::size_t n, std::size_t cap) {
  if (n == 0) throw DomainError("lower central series is indexed from 1");
  if (n > cap + 1) throw DomainError("membership in F_n needs cap >= n - 1");
  if (n == 1 || w.is_neutral()) return true;
  const auto d = expand(w, n - 1).lowest_degree();
  return !d;
}

}  // namespace wordlab::magnus
