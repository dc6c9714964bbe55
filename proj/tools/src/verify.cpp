#include "verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "wordlab/commutator.hpp"
#include "wordlab/free_product.hpp"
#include "wordlab/magnus.hpp"
#include "wordlab/matrix.hpp"
#include "wordlab/random.hpp"
#include "wordlab/schreier.hpp"
#include "wordlab/stallings.hpp"
#include "wordlab/tower.hpp"

namespace wordlab::cli {
namespace {

// Collects case outcomes for one property; keeps the first counterexample.
class Check {
 public:
  explicit Check(PropertyResult& result) : result_(result) {}

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = what;
  }

 private:
  PropertyResult& result_;
};

struct Property {
  std::string name;
  std::string anchor;
  std::function<void(Rng&, std::uint64_t, Check&)> body;
};

const AlphabetPtr& ab() {
  static const AlphabetPtr alphabet = Alphabet::make({"a", "b"});
  return alphabet;
}

const Split& ab_split() {
  static const Split split(ab(), {Part::A, Part::B});
  return split;
}

// Rank-4 split a1,a2 | b1,b2 for the free-product properties.
const Split& wide_split() {
  static const Split split = Split::parse("a1,a2|b1,b2");
  return split;
}

FreeWord ab_b() { return FreeWord::generator(ab(), 1); }

std::string show(const FreeWord& w) { return w.format(); }

MatrixAssignment random_assignment(Rng& rng, std::size_t rank) {
  MatrixAssignment m;
  for (GenIndex g = 0; g < rank; ++g) {
    Matrix2 x = Matrix2::identity();
    for (int step = 0; step < 4; ++step) {
      const long k = rng.uniform(-3, 3);
      x = x * (rng.coin() ? Matrix2::of(1, k, 0, 1) : Matrix2::of(1, 0, k, 1));
    }
    m.assign(g, x);
  }
  return m;
}

std::vector<FreeWord> generator_family(int N) {
  std::vector<FreeWord> gens;
  const FreeWord a = FreeWord::generator(ab(), 0);
  const FreeWord b = FreeWord::generator(ab(), 1);
  for (int n = -N; n <= N; ++n) {
    for (int m = -N; m <= N; ++m) {
      if (n != 0 && m != 0) gens.push_back(commutator(power(a, n), power(b, m)));
    }
  }
  return gens;
}

std::vector<Property> word_props() {
  return {
      {"word.reduction_idempotent", "reduce(reduce(w)) = reduce(w)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::word(ab(), rng, 30);
           c.expect(FreeWord::from_letters(ab(), w.letters()) == w, show(w));
         }
       }},
      {"word.inverse", "w w^-1 = 1",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::word(ab(), rng, 30);
           c.expect(concat(w, invert(w)).is_neutral() && concat(invert(w), w).is_neutral(), show(w));
         }
       }},
      {"word.matrix_homomorphism", "eval(uv) = eval(u) eval(v)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const MatrixAssignment m = random_assignment(rng, 2);
           const FreeWord u = gen::word(ab(), rng, 12);
           const FreeWord v = gen::word(ab(), rng, 12);
           c.expect(eval_matrix(concat(u, v), m) == eval_matrix(u, m) * eval_matrix(v, m),
                    show(u) + " | " + show(v));
         }
       }},
  };
}

std::vector<Property> free_product_props() {
  return {
      {"free_product.syllables_alternate", "x = u_1 u_2 ... u_n, parts alternate",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const Split& split = wide_split();
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::word(split.alphabet(), rng, 40);
           const SyllableForm form = syllables(w, split);
           bool ok = true;
           std::vector<FreeWord> words{FreeWord(split.alphabet())};
           for (std::size_t k = 0; k < form.size(); ++k) {
             ok = ok && !form[k].word.is_neutral() && split.part_of(form[k].word) == form[k].part;
             if (k > 0) ok = ok && form[k].part != form[k - 1].part;
             words.push_back(form[k].word);
           }
           ok = ok && concat(words) == w;
           c.expect(ok, show(w));
         }
       }},
      {"free_product.weight_odd", "w_b(x^-1) = -w_b(x)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const Split& split = wide_split();
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord b = gen::factor_word(split, Part::B, rng, 3);
           const FreeWord x = gen::product_word(split, b, rng, 40);
           c.expect(weight(invert(x), split, b) == -weight(x, split, b), show(x));
         }
       }},
  };
}

std::vector<Property> commutator_props() {
  return {
      {"commutator.single_weight", "|w_b([x,y])| <= 9",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const Split& split = wide_split();
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord b = gen::factor_word(split, Part::B, rng, 3);
           const FreeWord x = gen::product_word(split, b, rng, 40);
           const FreeWord y = gen::product_word(split, b, rng, 40);
           const std::int64_t wb = weight(commutator(x, y), split, b);
           c.expect(std::abs(wb) <= 9, show(x) + " | " + show(y));
         }
       }},
      {"commutator.product_weight", "|w_b(c_1 ... c_k)| <= 12k - 3",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const Split& split = wide_split();
         for (std::uint64_t i = 0; i < cases; ++i) {
           const auto k = static_cast<std::int64_t>(1 + i % 6);
           const FreeWord b = gen::factor_word(split, Part::B, rng, 3);
           std::vector<FreeWord> factors;
           for (std::int64_t j = 0; j < k; ++j) {
             factors.push_back(commutator(gen::product_word(split, b, rng, 24),
                                          gen::product_word(split, b, rng, 24)));
           }
           const FreeWord p = concat(factors);
           c.expect(std::abs(weight(p, split, b)) <= 12 * k - 3, show(p));
         }
       }},
      {"commutator.sup_weight", "w_b([ab,ba]^n) = -2n",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const Split& split = wide_split();
         const std::uint64_t trials = std::max<std::uint64_t>(1, cases / 20);
         for (std::uint64_t i = 0; i < trials; ++i) {
           const FreeWord a = gen::factor_word(split, Part::A, rng, 4);
           const FreeWord b = gen::factor_word(split, Part::B, rng, 4);
           for (const SupRow& row : sup_divergence_table(40, split, a, b)) {
             c.expect(row.weight == -2 * static_cast<std::int64_t>(row.L) &&
                          row.lower_bound == weight_bound(row.weight),
                      show(a) + " | " + show(b) + " L=" + std::to_string(row.L));
           }
         }
       }},
      {"commutator.sandwich", "cl_lower(w) <= cl(w) <= cl_upper(w)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::kernel_word(ab(), rng, 60);
           const ClBound upper = schreier::cl_upper_bound(w);
           c.expect(!upper.is_infinite() &&
                        cl_lower_bound(w, ab_split(), ab_b()) <= upper.value(),
                    show(w));
         }
       }},
      {"commutator.homomorphism_monotone", "cl(phi(g)) <= cl(g)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const FreeWord b = FreeWord::generator(tower::alphabet(), 2);
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::kernel_word(tower::alphabet(), rng, 12);
           const std::uint64_t lower = cl_lower_bound(tower::substitute(w), tower::split(), b);
           c.expect(lower <= schreier::cl_upper_bound(w).value(), show(w));
         }
       }},
      {"commutator.subadditive", "cl(g_2) - cl(g_1) - cl(g_3) <= cl(g_1 g_2 g_3)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const FreeWord b = ab_b();
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord g1 = gen::kernel_word(ab(), rng, 20);
           const FreeWord g2 = gen::kernel_word(ab(), rng, 20);
           const FreeWord g3 = gen::kernel_word(ab(), rng, 20);
           const auto ub = [](const FreeWord& w) {
             return static_cast<std::int64_t>(schreier::cl_upper_bound(w).value());
           };
           const auto lb = static_cast<std::int64_t>(cl_lower_bound(g2, ab_split(), b));
           const FreeWord product = concat(concat(g1, g2), g3);
           c.expect(lb - ub(g1) - ub(g3) <= ub(product), show(product));
         }
       }},
      {"commutator.wicks", "is_commutator([x,y]) and cl_lower([x,y]) <= 1",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const FreeWord b = ab_b();
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord x = gen::word(ab(), rng, 10);
           const FreeWord y = gen::word(ab(), rng, 10);
           const FreeWord w = commutator(x, y);
           c.expect(is_commutator(w) && cl_lower_bound(w, ab_split(), b) <= 1,
                    show(x) + " | " + show(y));
         }
       }},
      {"commutator.torsion_identities",
       "b^2 a = a b^2 => [a,b]^{2n} = [[a,b]^{-n}, b], [a,b]^{2n+1} = [a[a,b]^{-n}, b]",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const std::uint64_t trials = std::max<std::uint64_t>(1, cases / 10);
         for (std::uint64_t n = 1; n <= 5; ++n) {
           const RemarkReport report = remark_identity_check(n, trials, rng.next());
           c.expect(report.passed(), "n=" + std::to_string(n));
         }
       }},
  };
}

std::vector<Property> magnus_props() {
  return {
      {"magnus.multiplicative", "M(uv) = M(u) M(v) mod deg > c",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord u = gen::word(ab(), rng, 10);
           const FreeWord v = gen::word(ab(), rng, 10);
           c.expect(magnus::expand(concat(u, v), 5) ==
                        magnus::expand(u, 5) * magnus::expand(v, 5),
                    show(u) + " | " + show(v));
         }
       }},
      {"magnus.torsion_free", "lcs(w^k) = lcs(w), lowest part of w^k = k * lowest part of w",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::nonneutral_word(ab(), rng, 8);
           const auto k = static_cast<std::int64_t>(2 + i % 4);
           const std::size_t cap = w.letter_length();
           const auto dw = magnus::lcs_degree(w, cap);
           const auto dk = magnus::lcs_degree(power(w, k), cap);
           bool ok = dw.degree && dk.degree == dw.degree;
           if (ok) {
             auto scaled = magnus::expand(w, *dw.degree).homogeneous(*dw.degree);
             for (auto& [m, coef] : scaled) coef *= k;
             ok = scaled == magnus::expand(power(w, k), *dw.degree).homogeneous(*dw.degree);
           }
           c.expect(ok, show(w) + " k=" + std::to_string(k));
         }
       }},
      {"magnus.commutator_degree", "lcs([u,v]) >= lcs(u) + lcs(v)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord u = gen::nonneutral_word(ab(), rng, 5);
           const FreeWord v = gen::nonneutral_word(ab(), rng, 5);
           const FreeWord w = commutator(u, v);
           const std::size_t du = magnus::lcs_degree(u, 8).degree.value();
           const std::size_t dv = magnus::lcs_degree(v, 8).degree.value();
           if (w.is_neutral()) {
             c.expect(true, "");
             continue;
           }
           // Vanishing up to du + dv - 1 is all the inequality claims.
           c.expect(magnus::in_lower_central(w, du + dv, du + dv - 1),
                    show(u) + " | " + show(v));
         }
       }},
  };
}

std::vector<Property> stallings_props() {
  return {
      {"stallings.free_generators", "rank <[a^n,b^m] : 0 < |n|,|m| <= N> = (2N)^2",
       [](Rng&, std::uint64_t, Check& c) {
         for (int N = 1; N <= 2; ++N) {
           const auto gens = generator_family(N);
           const std::size_t r = stallings::rank(stallings::build(ab(), gens));
           c.expect(r == static_cast<std::size_t>(4 * N * N), "N=" + std::to_string(N));
         }
       }},
      {"stallings.membership", "g_1^{e_1} ... g_k^{e_k} in <g_1, ..., g_k>",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const auto gens = generator_family(2);
         const auto graph = stallings::build(ab(), gens);
         for (std::uint64_t i = 0; i < cases; ++i) {
           std::vector<FreeWord> factors;
           const auto len = rng.uniform(1, 6);
           for (std::int64_t j = 0; j < len; ++j) {
             const FreeWord& g = gens[static_cast<std::size_t>(
                 rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1))];
             factors.push_back(rng.coin() ? g : invert(g));
           }
           const FreeWord p = concat(factors);
           c.expect(stallings::contains(graph, p), show(p));
         }
       }},
      {"stallings.confluence", "fold order does not change the core graph",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           std::vector<FreeWord> gens;
           const auto count = rng.uniform(0, 4);
           for (std::int64_t j = 0; j < count; ++j) gens.push_back(gen::word(ab(), rng, 10));
           const auto fifo = stallings::build(ab(), gens, stallings::FoldOrder::Fifo);
           const auto lifo = stallings::build(ab(), gens, stallings::FoldOrder::Lifo);
           const auto rebuilt = stallings::build(ab(), stallings::basis(fifo));
           c.expect(stallings::isomorphic(fifo, lifo) && stallings::isomorphic(fifo, rebuilt) &&
                        stallings::rank(fifo) <= gens.size(),
                    "case " + std::to_string(i));
         }
       }},
  };
}

std::vector<Property> schreier_props() {
  return {
      {"schreier.round_trip", "expand(rewrite(w)) = w",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::kernel_word(ab(), rng, 60);
           c.expect(schreier::expand_letters(ab(), schreier::rewrite(w)) == w, show(w));
         }
       }},
      {"schreier.letters_are_commutators", "t x (tx)^-1 is a conjugate of a commutator",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         const std::uint64_t words = std::max<std::uint64_t>(1, cases / 10);
         for (std::uint64_t i = 0; i < words; ++i) {
           const FreeWord w = gen::kernel_word(ab(), rng, 30);
           for (const auto& letter : schreier::rewrite(w)) {
             const FreeWord lw = schreier::letter_word(ab(), letter.letter);
             c.expect(is_zero(abelianize(lw)) && is_commutator(cyclic_reduce(lw).core),
                      schreier::format(ab(), letter));
           }
         }
       }},
  };
}

std::vector<Property> tower_props() {
  return {
      {"tower.bonding_trivial", "f_* = 0 on H_1",
       [](Rng&, std::uint64_t, Check& c) {
         const tower::Matrix4 m = tower::bonding_abelianization();
         bool zero = true;
         for (const auto& row : m) {
           for (auto v : row) zero = zero && v == 0;
         }
         c.expect(zero, "bonding matrix");
       }},
      {"tower.colimit", "colim (Z^4, f^T) = 0",
       [](Rng&, std::uint64_t, Check& c) {
         for (std::size_t s = 1; s <= 6; ++s) {
           c.expect(tower::cech_colimit_rank(s) == 0, "stages=" + std::to_string(s));
         }
         tower::Matrix4 id{};
         for (std::size_t i = 0; i < 4; ++i) id[i][i] = 1;
         c.expect(tower::colimit_rank(id, 6) == 4, "identity fixture");
       }},
      {"tower.split_preserved", "x_{n,1}, x_{n,2} in <x1,x2>; x_{n,3}, x_{n,4} in <x3,x4>",
       [](Rng&, std::uint64_t, Check& c) {
         for (std::uint64_t n = 1; n <= 4; ++n) {
           for (unsigned i = 1; i <= 4; ++i) {
             const auto part = tower::split().part_of(tower::expand_to_base(n, i));
             c.expect(part == (i <= 2 ? Part::A : Part::B),
                      "n=" + std::to_string(n) + " i=" + std::to_string(i));
           }
         }
       }},
      {"tower.degree_growth", "lcs(sigma(w)) >= 2 lcs(w)",
       [](Rng& rng, std::uint64_t cases, Check& c) {
         for (std::uint64_t i = 0; i < cases; ++i) {
           const FreeWord w = gen::nonneutral_word(tower::alphabet(), rng, 3);
           const std::size_t d = magnus::lcs_degree(w, 8).degree.value();
           const FreeWord s = tower::substitute(w);
           c.expect(s.is_neutral() || magnus::in_lower_central(s, 2 * d, 2 * d - 1), show(w));
         }
       }},
      {"tower.certificate", "cl(g_n) >= ceil((2 L_n + 3) / 12) > 2 K_n + n",
       [](Rng&, std::uint64_t, Check& c) {
         const tower::Certificate cert = tower::build_certificate(3);
         for (const auto& s : cert.stages) {
           c.expect(s.passed && s.slack >= 1 && s.weight == -2 * static_cast<std::int64_t>(s.L),
                    "stage " + std::to_string(s.n));
         }
         const auto& s1 = cert.stages.at(0);
         c.expect(s1.K_hat == 0 && s1.L == 5 && s1.weight == -10 && s1.lower_bound == 2,
                  "stage 1 record");
         // Any larger K still certifies once L is re-derived from it.
         for (const auto& s : cert.stages) {
           for (std::uint64_t extra : {1U, 5U}) {
             const auto bumped = tower::certify_stage(s.n, s.alpha, s.beta, s.K_hat + extra,
                                                      tower::kDefaultBudget);
             c.expect(bumped.passed, "stage " + std::to_string(s.n) + " K+" +
                                         std::to_string(extra));
           }
         }
       }},
  };
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed(); });
}

VerifyReport verify(Suite suite, std::uint64_t seed, std::uint64_t cases) {
  std::vector<Property> props;
  const auto append = [&props](std::vector<Property> more) {
    for (auto& p : more) props.push_back(std::move(p));
  };
  if (suite != Suite::Tower) {
    append(word_props());
    append(free_product_props());
    append(commutator_props());
    append(magnus_props());
    append(stallings_props());
    append(schreier_props());
  }
  if (suite != Suite::Props) append(tower_props());

  VerifyReport report;
  for (std::size_t i = 0; i < props.size(); ++i) {
    PropertyResult result{props[i].name, props[i].anchor, 0, 0, {}};
    Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    Check check(result);
    try {
      props[i].body(rng, cases, check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    report.properties.push_back(std::move(result));
  }
  return report;
}

}  // namespace wordlab::cli
