#include "wordlab_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "verify.hpp"
#include "wordlab/commutator.hpp"
#include "wordlab/error.hpp"
#include "wordlab/free_product.hpp"
#include "wordlab/magnus.hpp"
#include "wordlab/schreier.hpp"
#include "wordlab/stallings.hpp"
#include "wordlab/tower.hpp"

namespace wordlab::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Thrown for invalid flag combinations or unreadable inputs; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts) {
  std::string text;
  for (const auto& p : parts) {
    if (!text.empty()) text += ' ';
    text += p;
  }
  return text;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) names.push_back(name);
  return names;
}

// Flags shared by the word-level subcommands.
struct WordInput {
  std::string first_word;
  std::vector<std::string> words;
  std::string alphabet;
  std::string split;
  std::string b;
  bool json = false;

  // Declared alphabet, else the split's, else first appearance in `texts`.
  AlphabetPtr resolve_alphabet(const std::vector<std::string>& texts) const {
    if (!alphabet.empty()) return Alphabet::make(split_names(alphabet));
    if (!split.empty()) return Split::parse(split).alphabet();
    std::string all;
    for (const auto& t : texts) all += t + " ";
    auto names = scan_generators(all);
    if (names.empty()) names.push_back("a");
    return Alphabet::make(std::move(names));
  }

  std::string word_text() const {
    if (words.empty()) throw UsageError("a word argument is required");
    return join(words);
  }

  void need_split() const {
    if (split.empty()) throw UsageError("--split is required (notation a1,a2|b1,b2)");
  }

  void need_b() const {
    if (b.empty()) throw UsageError("--b is required");
  }
};

// A single-valued positional: CLI11 would expand "[x, y]" as a list on vector options.
// Further tokens are collected as extras and joined to the word.
void add_word(CLI::App* cmd, WordInput& in) {
  cmd->add_option("word", in.first_word, "word, e.g. \"[a b, b a]\"");
  cmd->allow_extras();
  cmd->parse_complete_callback([cmd, &in] {
    if (!in.first_word.empty()) in.words.push_back(in.first_word);
    for (auto& extra : cmd->remaining()) in.words.push_back(extra);
  });
}

void add_alphabet(CLI::App* cmd, WordInput& in) {
  cmd->add_option("--alphabet", in.alphabet, "comma-separated generator names");
}

void add_split(CLI::App* cmd, WordInput& in) {
  cmd->add_option("--split", in.split, "free product split, e.g. a|b or a1,a2|b1,b2");
}

void add_json(CLI::App* cmd, WordInput& in) { cmd->add_flag("--json", in.json, "JSON output"); }

Json bound_json(const ClBound& bound) {
  if (bound.is_infinite()) return "inf";
  return bound.value();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// Parsed word plus the split it is read against.
struct SplitWord {
  Split split;
  FreeWord word;
};

SplitWord read_split_word(const WordInput& in) {
  in.need_split();
  const std::string text = in.word_text();
  Split split = in.alphabet.empty() ? Split::parse(in.split)
                                    : Split::parse(in.split, in.resolve_alphabet({}));
  FreeWord w = parse(text, split.alphabet());
  return {std::move(split), std::move(w)};
}

std::vector<FreeWord> read_generators(const std::string& path, const AlphabetPtr& alphabet) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  std::vector<FreeWord> gens;
  std::string line;
  while (std::getline(file, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    gens.push_back(parse(line, alphabet));
  }
  return gens;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(file, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') lines.push_back(line);
  }
  return lines;
}

Json certificate_json(const tower::Certificate& cert) {
  Json stages = Json::array();
  for (const auto& s : cert.stages) {
    stages.push_back({{"n", s.n},
                      {"m_n", s.m_n},
                      {"K_hat", s.K_hat},
                      {"L", s.L},
                      {"weight", s.weight},
                      {"lower_bound", s.lower_bound},
                      {"slack", s.slack}});
  }
  return {{"stages", stages}, {"verdict", cert.passed() ? "pass" : "fail"}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in free groups and free products", "wordlab"};
  app.require_subcommand(1);

  WordInput in;
  std::function<int()> action;

  auto* reduce_cmd = app.add_subcommand("reduce", "print the freely reduced word");
  add_word(reduce_cmd, in);
  add_alphabet(reduce_cmd, in);
  add_json(reduce_cmd, in);
  reduce_cmd->callback([&] {
    action = [&] {
      const FreeWord w = parse(in.word_text(), in.resolve_alphabet(in.words));
      if (in.json) {
        emit(out, {{"word", w.format()}, {"length", w.letter_length()}});
      } else {
        out << w.format() << '\n';
      }
      return kOk;
    };
  });

  auto* wb_cmd = app.add_subcommand("wb", "Rhemtulla weight w_b");
  add_word(wb_cmd, in);
  add_alphabet(wb_cmd, in);
  add_split(wb_cmd, in);
  add_json(wb_cmd, in);
  wb_cmd->add_option("--b", in.b, "syllable b, in one factor");
  wb_cmd->callback([&] {
    action = [&] {
      in.need_b();
      const auto [split, w] = read_split_word(in);
      const FreeWord b = parse(in.b, split.alphabet());
      const std::int64_t value = weight(w, split, b);
      if (in.json) {
        emit(out, {{"weight", value}});
      } else {
        out << value << '\n';
      }
      return kOk;
    };
  });

  auto* syl_cmd = app.add_subcommand("syllables", "free product normal form");
  add_word(syl_cmd, in);
  add_alphabet(syl_cmd, in);
  add_split(syl_cmd, in);
  add_json(syl_cmd, in);
  syl_cmd->callback([&] {
    action = [&] {
      const auto [split, w] = read_split_word(in);
      const SyllableForm form = syllables(w, split);
      if (in.json) {
        Json rows = Json::array();
        for (const auto& s : form) {
          rows.push_back({{"part", std::string(1, label(s.part))}, {"word", s.word.format()}});
        }
        emit(out, {{"syllables", rows}});
      } else {
        for (const auto& s : form) out << label(s.part) << ' ' << s.word.format() << '\n';
      }
      return kOk;
    };
  });

  auto* bounds_cmd = app.add_subcommand("cl-bounds", "commutator length lower and upper bounds");
  add_word(bounds_cmd, in);
  add_alphabet(bounds_cmd, in);
  add_split(bounds_cmd, in);
  add_json(bounds_cmd, in);
  bounds_cmd->add_option("--b", in.b, "syllable b for the weight bound");
  bounds_cmd->callback([&] {
    action = [&] {
      in.need_b();
      const auto [split, w] = read_split_word(in);
      const FreeWord b = parse(in.b, split.alphabet());
      const ClBounds bounds = cl_bounds(w, split, b);
      const Json lower = bounds.lower ? Json(*bounds.lower) : Json("inf");
      if (in.json) {
        emit(out, {{"lower", lower}, {"upper", bound_json(bounds.upper)}});
      } else {
        out << "lower " << (bounds.lower ? std::to_string(*bounds.lower) : "inf") << '\n'
            << "upper " << bounds.upper.format() << '\n';
      }
      return kOk;
    };
  });

  auto* upper_cmd = app.add_subcommand("cl-upper", "Schreier rewriting upper bound");
  add_word(upper_cmd, in);
  add_alphabet(upper_cmd, in);
  add_json(upper_cmd, in);
  upper_cmd->callback([&] {
    action = [&] {
      const AlphabetPtr alphabet = in.resolve_alphabet(in.words);
      const FreeWord w = parse(in.word_text(), alphabet);
      const ClBound bound = schreier::cl_upper_bound(w);
      std::vector<schreier::SignedLetter> letters;
      if (!bound.is_infinite()) letters = schreier::rewrite(w);
      if (in.json) {
        Json rows = Json::array();
        for (const auto& l : letters) {
          rows.push_back({{"coset", l.letter.coset},
                          {"gen", alphabet->name(l.letter.gen)},
                          {"sign", l.sign}});
        }
        emit(out, {{"upper", bound_json(bound)}, {"letters", rows}});
      } else {
        out << bound.format() << '\n';
        for (const auto& l : letters) out << schreier::format(alphabet, l) << '\n';
      }
      return kOk;
    };
  });

  auto* wicks_cmd = app.add_subcommand("wicks", "decide whether a word is a single commutator");
  add_word(wicks_cmd, in);
  add_alphabet(wicks_cmd, in);
  add_json(wicks_cmd, in);
  wicks_cmd->callback([&] {
    action = [&] {
      const FreeWord w = parse(in.word_text(), in.resolve_alphabet(in.words));
      const bool yes = is_commutator(w);
      if (in.json) {
        emit(out, {{"commutator", yes}});
      } else {
        out << (yes ? "true" : "false") << '\n';
      }
      return yes ? kOk : kNegative;
    };
  });

  std::uint64_t l_max = 20;
  std::string sup_a = "a";
  auto* sup_cmd = app.add_subcommand("sup-table", "weights and lower bounds of [ab, ba]^L");
  add_alphabet(sup_cmd, in);
  add_split(sup_cmd, in);
  add_json(sup_cmd, in);
  sup_cmd->add_option("--a", sup_a, "element of the first factor")->capture_default_str();
  sup_cmd->add_option("--b", in.b, "element of the second factor (default b)");
  sup_cmd->add_option("--L-max", l_max, "largest power")->capture_default_str();
  sup_cmd->callback([&] {
    action = [&] {
      if (in.split.empty()) in.split = "a|b";
      if (in.b.empty()) in.b = "b";
      const Split split = in.alphabet.empty() ? Split::parse(in.split)
                                              : Split::parse(in.split, in.resolve_alphabet({}));
      const FreeWord a = parse(sup_a, split.alphabet());
      const FreeWord b = parse(in.b, split.alphabet());
      const auto rows = sup_divergence_table(l_max, split, a, b);
      if (in.json) {
        Json doc = Json::array();
        for (const auto& r : rows) {
          doc.push_back({{"L", r.L}, {"weight", r.weight}, {"lower_bound", r.lower_bound}});
        }
        emit(out, doc);
      } else {
        out << "L weight lower_bound\n";
        for (const auto& r : rows) out << r.L << ' ' << r.weight << ' ' << r.lower_bound << '\n';
      }
      return kOk;
    };
  });

  std::uint64_t remark_n = 0;
  std::uint64_t remark_n_max = 10;
  std::uint64_t trials = 50;
  std::uint64_t seed = 1;
  auto* remark_cmd = app.add_subcommand(
      "remark-check", "matrix check of the b^2 a = a b^2 power identities");
  add_json(remark_cmd, in);
  remark_cmd->add_option("--n", remark_n, "single n (default: 1..n-max)");
  remark_cmd->add_option("--n-max", remark_n_max, "largest n")->capture_default_str();
  remark_cmd->add_option("--trials", trials, "matrix pairs per n")->capture_default_str();
  remark_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  remark_cmd->callback([&] {
    action = [&] {
      const std::uint64_t lo = remark_n ? remark_n : 1;
      const std::uint64_t hi = remark_n ? remark_n : remark_n_max;
      bool all = true;
      Json rows = Json::array();
      for (std::uint64_t n = lo; n <= hi; ++n) {
        const RemarkReport r = remark_identity_check(n, trials, seed + n);
        std::uint64_t even = 0;
        std::uint64_t odd = 0;
        for (const auto& t : r.trials) {
          even += t.even_holds;
          odd += t.odd_holds;
        }
        all = all && r.passed();
        if (in.json) {
          rows.push_back({{"n", n},
                          {"trials", r.trials.size()},
                          {"even_holds", even},
                          {"odd_holds", odd},
                          {"free_control_differs", r.free_control_differs},
                          {"passed", r.passed()}});
        } else {
          out << "n=" << n << " trials=" << r.trials.size() << " even=" << even
              << " odd=" << odd << " free_control=" << (r.free_control_differs ? "differs" : "equal")
              << ' ' << (r.passed() ? "pass" : "fail") << '\n';
        }
      }
      if (in.json) emit(out, {{"rows", rows}, {"verdict", all ? "pass" : "fail"}});
      return all ? kOk : kNegative;
    };
  });

  std::size_t cap = 4;
  auto* magnus_cmd = app.add_subcommand("magnus", "truncated Magnus expansion");
  add_word(magnus_cmd, in);
  add_alphabet(magnus_cmd, in);
  add_json(magnus_cmd, in);
  magnus_cmd->add_option("--cap", cap, "degree cap")->capture_default_str();
  magnus_cmd->callback([&] {
    action = [&] {
      const AlphabetPtr alphabet = in.resolve_alphabet(in.words);
      const FreeWord w = parse(in.word_text(), alphabet);
      const auto series = magnus::expand(w, cap);
      if (in.json) {
        Json terms = Json::array();
        for (const auto& [m, c] : series.terms()) {
          Json mono = Json::array();
          for (GenIndex g : m) mono.push_back(alphabet->name(g));
          terms.push_back({{"monomial", mono}, {"coefficient", c.get_str()}});
        }
        emit(out, {{"cap", cap}, {"terms", terms}});
      } else {
        out << series.format(*alphabet);
      }
      return kOk;
    };
  });

  auto* lcs_cmd = app.add_subcommand("lcs-degree", "largest n with the word in F_n");
  add_word(lcs_cmd, in);
  add_alphabet(lcs_cmd, in);
  add_json(lcs_cmd, in);
  lcs_cmd->add_option("--cap", cap, "degree cap")->capture_default_str();
  lcs_cmd->callback([&] {
    action = [&] {
      const FreeWord w = parse(in.word_text(), in.resolve_alphabet(in.words));
      if (w.is_neutral()) throw DomainError("the neutral word lies in every F_n");
      const auto result = magnus::lcs_degree(w, cap);
      if (in.json) {
        emit(out, {{"degree", result.degree ? Json(*result.degree) : Json(nullptr)},
                   {"cap_used", result.cap_used}});
      } else if (result.degree) {
        out << *result.degree << '\n';
      } else {
        out << "exceeds cap " << result.cap_used << '\n';
      }
      return result.exceeds_cap() ? kNegative : kOk;
    };
  });

  std::string gens_path;
  auto* st_cmd = app.add_subcommand("stallings", "subgroup graphs");
  st_cmd->require_subcommand(1);
  const auto st_common = [&](CLI::App* cmd) {
    add_alphabet(cmd, in);
    add_json(cmd, in);
    cmd->add_option("--gens", gens_path, "file with one generator word per line")->required();
  };
  const auto load_graph = [&](const std::vector<std::string>& extra) {
    std::vector<std::string> texts = read_lines(gens_path);
    texts.insert(texts.end(), extra.begin(), extra.end());
    const AlphabetPtr alphabet = in.resolve_alphabet(texts);
    return stallings::build(alphabet, read_generators(gens_path, alphabet));
  };

  auto* rank_cmd = st_cmd->add_subcommand("rank", "rank of the subgroup");
  st_common(rank_cmd);
  rank_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph({});
      if (in.json) {
        emit(out, {{"rank", stallings::rank(g)},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()}});
      } else {
        out << stallings::rank(g) << '\n';
      }
      return kOk;
    };
  });

  auto* member_cmd = st_cmd->add_subcommand("member", "subgroup membership");
  st_common(member_cmd);
  add_word(member_cmd, in);
  member_cmd->callback([&] {
    action = [&] {
      const std::string text = in.word_text();
      const auto g = load_graph({text});
      const bool yes = stallings::contains(g, parse(text, g.alphabet()));
      if (in.json) {
        emit(out, {{"member", yes}});
      } else {
        out << (yes ? "true" : "false") << '\n';
      }
      return yes ? kOk : kNegative;
    };
  });

  auto* basis_cmd = st_cmd->add_subcommand("basis", "free basis read off a spanning tree");
  st_common(basis_cmd);
  basis_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph({});
      const auto words = stallings::basis(g);
      if (in.json) {
        Json list = Json::array();
        for (const auto& w : words) list.push_back(w.format());
        emit(out, {{"basis", list}});
      } else {
        for (const auto& w : words) out << w.format() << '\n';
      }
      return kOk;
    };
  });

  std::uint64_t tower_n = 1;
  unsigned tower_i = 1;
  std::uint64_t n_max = 3;
  std::size_t tower_cap = 8;
  std::string json_path;
  auto* tower_cmd = app.add_subcommand("tower", "the substitution tower");
  tower_cmd->require_subcommand(1);

  auto* expand_cmd = tower_cmd->add_subcommand("expand", "x_{n,i} written in x1..x4");
  add_json(expand_cmd, in);
  expand_cmd->add_option("--n", tower_n, "stage")->required();
  expand_cmd->add_option("--i", tower_i, "generator 1..4")->required()->check(CLI::Range(1, 4));
  expand_cmd->callback([&] {
    action = [&] {
      const FreeWord w = tower::expand_to_base(tower_n, tower_i);
      if (in.json) {
        emit(out, {{"word", w.format()}, {"length", w.letter_length()}});
      } else {
        out << w.format() << '\n';
      }
      return kOk;
    };
  });

  auto* mn_cmd = tower_cmd->add_subcommand("mn", "least m with x_{n,1}, x_{n,3} outside F_m");
  add_json(mn_cmd, in);
  mn_cmd->add_option("--n", tower_n, "stage")->required();
  mn_cmd->add_option("--cap", tower_cap, "Magnus cap")->capture_default_str();
  mn_cmd->callback([&] {
    action = [&] {
      try {
        const std::uint64_t m = tower::find_m(tower_n, tower_cap);
        if (in.json) {
          emit(out, {{"n", tower_n}, {"m_n", m}});
        } else {
          out << m << '\n';
        }
        return kOk;
      } catch (const tower::ExceedsCap& e) {
        if (in.json) {
          emit(out, {{"n", tower_n}, {"m_n", nullptr}, {"exceeds_cap", e.cap()}});
        } else {
          out << "exceeds cap " << e.cap() << '\n';
        }
        return kNegative;
      }
    };
  });

  auto* cert_cmd = tower_cmd->add_subcommand("certificate", "stage-by-stage inequality record");
  cert_cmd->add_option("--n-max", n_max, "last stage")->capture_default_str();
  cert_cmd->add_option("--cap", tower_cap, "Magnus cap")->capture_default_str();
  cert_cmd->add_option("--json", json_path, "also write the certificate to this file");
  cert_cmd->callback([&] {
    action = [&] {
      tower::Options options;
      options.magnus_cap = tower_cap;
      options.budget = tower::budget_from_env();
      Json doc;
      bool passed = false;
      try {
        const tower::Certificate cert = tower::build_certificate(n_max, options);
        doc = certificate_json(cert);
        passed = cert.passed();
      } catch (const tower::BudgetExceeded& e) {
        doc = certificate_json(e.partial());
        doc["verdict"] = "fail";
        doc["budget_exceeded"] = {
            {"stage", e.stage()}, {"needed", e.needed()}, {"budget", e.budget()}};
      } catch (const tower::ExceedsCap& e) {
        doc = {{"stages", Json::array()}, {"verdict", "fail"}, {"exceeds_cap", e.cap()}};
      }
      if (!json_path.empty()) {
        std::ofstream file(json_path);
        if (!file) throw UsageError("cannot write " + json_path);
        file << doc.dump(2) << '\n';
      }
      emit(out, doc);
      return passed ? kOk : kNegative;
    };
  });

  std::string suite_name;
  std::uint64_t verify_seed = 7;
  std::uint64_t cases = 200;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("suite", suite_name, "props, tower or all")
      ->required()
      ->check(CLI::IsMember({"props", "tower", "all"}));
  verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--cases", cases, "cases per property")->capture_default_str();
  verify_cmd->callback([&] {
    action = [&] {
      const Suite suite = suite_name == "props"   ? Suite::Props
                          : suite_name == "tower" ? Suite::Tower
                                                  : Suite::All;
      const VerifyReport report = verify(suite, verify_seed, cases);
      Json props = Json::array();
      for (const auto& p : report.properties) {
        Json row = {{"name", p.name},
                    {"anchor", p.anchor},
                    {"cases", p.cases},
                    {"failures", p.failures},
                    {"passed", p.passed()}};
        if (!p.passed()) row["first_failure"] = p.first_failure;
        props.push_back(row);
      }
      emit(out, {{"suite", suite_name},
                 {"seed", verify_seed},
                 {"cases", cases},
                 {"properties", props},
                 {"verdict", report.passed() ? "pass" : "fail"}});
      return report.passed() ? kOk : kNegative;
    };
  });

  std::vector<std::string> argv_store{"wordlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (!action) return kUsage;
  try {
    return action();
  } catch (const UsageError& e) {
    err << "wordlab: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "wordlab: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownGenerator& e) {
    err << "wordlab: " << e.what() << '\n';
    return kUsage;
  } catch (const AlphabetMismatch& e) {
    err << "wordlab: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "wordlab: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "wordlab: " << e.what() << '\n';
    return kNegative;
  }
}

}  // namespace wordlab::cli
