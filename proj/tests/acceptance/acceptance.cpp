// One line per acceptance criterion; exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wordlab/commutator.hpp"
#include "wordlab/free_product.hpp"
#include "wordlab/magnus.hpp"
#include "wordlab/random.hpp"
#include "wordlab/schreier.hpp"
#include "wordlab/stallings.hpp"
#include "wordlab/tower.hpp"

using namespace wordlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string first_failure;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) first_failure = what;
    passed = passed && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  std::chrono::microseconds limit;  // zero: no runtime bound
  std::function<void(Outcome&)> body;
};

const AlphabetPtr& ab() {
  static const AlphabetPtr alphabet = Alphabet::make({"a", "b"});
  return alphabet;
}

const Split& ab_split() {
  static const Split split(ab(), {Part::A, Part::B});
  return split;
}

const Split& wide_split() {
  static const Split split = Split::parse("a1,a2|b1,b2");
  return split;
}

FreeWord random_b(Rng& rng) {
  return gen::factor_word(wide_split(), rng.coin() ? Part::A : Part::B, rng, 3);
}

void weight_of_basic_commutator(Outcome& o) {
  const FreeWord a = FreeWord::generator(ab(), 0);
  const FreeWord b = FreeWord::generator(ab(), 1);
  const FreeWord w = commutator(concat(a, b), concat(b, a));
  const std::int64_t wb = weight(w, ab_split(), b);
  o.detail << "w_b = " << wb << ", word = " << w.format() << "; ";
  o.require(wb == -2, "weight");
  o.require(w == parse("b^-1 a^-2 b^-1 a b^2 a", ab()), "reduced word");
  o.require(w.format() == "b^-1 a^-2 b^-1 a b^2 a", "formatted word");
}

void sup_divergence(Outcome& o) {
  const auto rows = sup_divergence_table(500, ab_split(), FreeWord::generator(ab(), 0),
                                         FreeWord::generator(ab(), 1));
  o.require(rows.size() == 500, "row count");
  for (const auto& r : rows) {
    o.require(r.weight == -2 * static_cast<std::int64_t>(r.L), "L=" + std::to_string(r.L));
  }
  o.detail << "lower bound at L=500: " << rows.back().lower_bound << "; ";
  o.require(rows.back().lower_bound >= 83, "lower bound at 500");
}

void single_commutator_weight(Outcome& o) {
  Rng rng(20261014);
  std::int64_t worst = 0;
  for (int i = 0; i < 10'000; ++i) {
    const FreeWord b = random_b(rng);
    const FreeWord x = gen::product_word(wide_split(), b, rng, 40);
    const FreeWord y = gen::product_word(wide_split(), b, rng, 40);
    o.require(x.letter_length() <= 40 && y.letter_length() <= 40, "length bound");
    const std::int64_t wb = weight(commutator(x, y), wide_split(), b);
    worst = std::max(worst, std::abs(wb));
    o.require(std::abs(wb) <= 9, x.format() + " | " + y.format());
  }
  o.detail << "max |w_b| = " << worst << "; ";
}

void product_weight(Outcome& o) {
  Rng rng(314159);
  for (std::int64_t k = 1; k <= 6; ++k) {
    std::int64_t worst = 0;
    for (int i = 0; i < 2'000; ++i) {
      const FreeWord b = random_b(rng);
      std::vector<FreeWord> factors;
      for (std::int64_t j = 0; j < k; ++j) {
        factors.push_back(commutator(gen::product_word(wide_split(), b, rng, 30),
                                     gen::product_word(wide_split(), b, rng, 30)));
      }
      const std::int64_t wb = weight(concat(factors), wide_split(), b);
      worst = std::max(worst, std::abs(wb));
      o.require(std::abs(wb) <= 12 * k - 3, "k=" + std::to_string(k));
    }
    o.detail << "k=" << k << " max " << worst << "; ";
  }
}

void sandwich(Outcome& o) {
  Rng rng(2718);
  std::uint64_t tight = 0;
  for (int i = 0; i < 1'000; ++i) {
    const bool wide = i % 2 == 1;
    const Split& split = wide ? wide_split() : ab_split();
    const FreeWord w = gen::kernel_word(split.alphabet(), rng, 60);
    const FreeWord b = wide ? random_b(rng) : FreeWord::generator(ab(), 1);
    o.require(w.letter_length() <= 60, "length");
    const auto letters = schreier::rewrite(w);
    o.require(schreier::expand_letters(split.alphabet(), letters) == w, "round trip " + w.format());
    const ClBound upper = schreier::cl_upper_bound(w);
    const std::uint64_t lower = cl_lower_bound(w, split, b);
    o.require(!upper.is_infinite() && lower <= upper.value(), "sandwich " + w.format());
    tight += !upper.is_infinite() && lower == upper.value();
  }
  o.detail << tight << " of 1000 with equal bounds; ";
}

void magnus_suite(Outcome& o) {
  const auto deg = [](const FreeWord& w, std::size_t cap) { return magnus::lcs_degree(w, cap); };
  o.require(deg(parse("[a,b]", ab()), 8).degree == 2U, "[a,b]");
  o.require(deg(parse("[[a,b],b]", ab()), 8).degree == 3U, "[[a,b],b]");

  Rng rng(1618);
  for (int i = 0; i < 500; ++i) {
    const FreeWord w = gen::nonneutral_word(ab(), rng, 10);
    const auto k = rng.uniform(2, 5);
    const std::size_t cap = std::min<std::size_t>(8, w.letter_length());
    const auto dw = deg(w, cap);
    const auto dk = deg(power(w, k), cap);
    o.require(!dw.exceeds_cap() && dk.degree == dw.degree,
              "torsion " + w.format() + " k=" + std::to_string(k));
  }

  o.detail << "tower degrees at cap 8:";
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const auto d = deg(tower::expand_to_base(n, 1), 8);
    const std::size_t expected = std::size_t{1} << (n - 1);
    o.detail << " n=" << n << ":" << (d.degree ? std::to_string(*d.degree) : "exceeds cap")
             << "(expected " << expected << ")";
    o.require(d.degree == expected, "tower degree n=" + std::to_string(n));
  }
  o.detail << "; ";
}

std::vector<FreeWord> generator_family(int N) {
  std::vector<FreeWord> gens;
  for (int n = -N; n <= N; ++n) {
    for (int m = -N; m <= N; ++m) {
      if (n == 0 || m == 0) continue;
      gens.push_back(commutator(FreeWord::generator(ab(), 0, n), FreeWord::generator(ab(), 1, m)));
    }
  }
  return gens;
}

void free_generators(Outcome& o) {
  Rng rng(4242);
  for (int N = 1; N <= 2; ++N) {
    const auto gens = generator_family(N);
    const auto graph = stallings::build(ab(), gens);
    const std::size_t r = stallings::rank(graph);
    o.detail << "N=" << N << " rank " << r << "; ";
    o.require(r == static_cast<std::size_t>(4 * N * N), "rank N=" + std::to_string(N));
    for (int i = 0; i < 200; ++i) {
      std::vector<FreeWord> factors;
      const auto len = rng.uniform(1, 8);
      for (std::int64_t j = 0; j < len; ++j) {
        const auto& g = gens[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1))];
        factors.push_back(rng.coin() ? g : invert(g));
      }
      o.require(stallings::contains(graph, concat(factors)), "membership");
    }
  }
}

void torsion_identities(Outcome& o) {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const RemarkReport r = remark_identity_check(n, 50, 1000 + n);
    bool all = r.trials.size() == 50;
    for (const auto& t : r.trials) all = all && t.even_holds && t.odd_holds;
    o.require(all, "identities n=" + std::to_string(n));
    o.require(r.free_control_differs, "free control n=" + std::to_string(n));
    o.require(r.passed(), "report n=" + std::to_string(n));
  }
}

void certificate(Outcome& o) {
  tower::Options options;
  options.magnus_cap = 8;
  const tower::Certificate cert = tower::build_certificate(3, options);
  o.require(cert.passed() && cert.stages.size() == 3, "verdict");
  for (const auto& s : cert.stages) {
    o.detail << "n=" << s.n << " m=" << s.m_n << " K=" << s.K_hat << " L=" << s.L
             << " w=" << s.weight << " lb=" << s.lower_bound << " slack=" << s.slack << "; ";
    o.require(s.slack >= 1, "slack n=" + std::to_string(s.n));
    o.require(s.weight == -2 * static_cast<std::int64_t>(s.L), "weight n=" + std::to_string(s.n));
  }
  const auto& s1 = cert.stages.at(0);
  o.require(s1.K_hat == 0 && s1.L == 5 && s1.weight == -10 && s1.lower_bound == 2, "stage 1");
  bool zero = true;
  for (const auto& row : tower::bonding_abelianization()) {
    for (auto v : row) zero = zero && v == 0;
  }
  o.require(zero, "bonding matrix");
  o.require(tower::cech_colimit_rank(6) == 0, "colimit rank");
}

}  // namespace

int main() {
  using std::chrono::microseconds;
  using std::chrono::seconds;
  const std::vector<Criterion> criteria = {
      {1, "w_b([ab,ba]) = -2 with reduced word b^-1 a^-2 b^-1 a b^2 a", microseconds(1000),
       weight_of_basic_commutator},
      {2, "w_b([ab,ba]^L) = -2L for L = 1..500, lower bound >= 83 at 500", seconds(2),
       sup_divergence},
      {3, "|w_b([x,y])| <= 9 on 10000 random pairs", microseconds(0), single_commutator_weight},
      {4, "|w_b| <= 12k - 3 on 2000 products of k commutators, k = 1..6", microseconds(0),
       product_weight},
      {5, "cl lower <= cl upper and exact rewriting round trip on 1000 kernel words",
       microseconds(0), sandwich},
      {6, "lcs degrees, torsion-freeness, tower degrees 2^(n-1)", seconds(60), magnus_suite},
      {7, "rank <[a^n,b^m]> = (2N)^2 for N = 1,2 and membership of 200 products", seconds(10),
       free_generators},
      {8, "b^2 a = a b^2 power identities on 50 matrix pairs for n = 1..10, free control differs",
       microseconds(0), torsion_identities},
      {9, "tower certificate to stage 3, zero bonding map, colimit rank 0", seconds(300),
       certificate},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto elapsed = std::chrono::duration_cast<microseconds>(Clock::now() - start);
    if (c.limit.count() > 0 && elapsed > c.limit) {
      o.require(false, "runtime " + std::to_string(elapsed.count()) + " us over limit " +
                           std::to_string(c.limit.count()) + " us");
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
              << elapsed.count() << " us] " << o.detail.str();
    if (!o.passed) std::cout << "first failure: " << o.first_failure;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << '\n';
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
