#include "curvecal/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "curvecal/error.hpp"
#include "curvecal/serialize.hpp"

namespace curvecal::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "@path" reads the file; anything else is taken literally.
std::string resolve(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  const std::string path = arg.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WordOptions options_from_env() {
  WordOptions opts;
  if (const char* env = std::getenv("CURVECAL_MAX_EXP")) {
    std::string_view s(env);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 1) {
      throw UsageError("CURVECAL_MAX_EXP must be a positive integer, got '" + std::string(s) + "'");
    }
    opts.max_exponent = v;
  }
  return opts;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string type_text(const MorseType& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         "," + std::to_string(t[3]) + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

HeegaardDiagram diagram_input(int genus, const std::vector<std::string>& inputs,
                              const WordOptions& opts) {
  if (genus > 0) {
    std::vector<std::string> words;
    for (const auto& in : inputs) words.push_back(resolve(in));
    return build_heegaard(genus, words, opts);
  }
  if (inputs.size() != 1) {
    throw UsageError("without -g, give exactly one diagram (text or @path)");
  }
  return parse_heegaard_text(resolve(inputs.front()), opts);
}

void print_report(std::ostream& out, const ClassificationReport& r) {
  std::vector<std::int64_t> sigma(r.sigma.begin(), r.sigma.end());
  out << "sigma: " << join(sigma) << '\n'
      << "orders: " << join(r.orders) << '\n'
      << "pi1: " << r.pi1 << '\n'
      << "simply_connected: " << yes_no(r.simply_connected) << '\n'
      << "finite: " << yes_no(r.finite) << '\n'
      << "prime: " << yes_no(r.prime) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"curvecal: intersection calculus on surfaces and handle-data 3-manifolds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  bool json = false;
  int genus = 0;
  std::vector<std::string> words;
  std::vector<std::string> theta;
  std::vector<std::string> gamma;
  std::string matrix_arg;
  std::string input;
  int pmin = 1;
  int pmax = 20;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };

  auto* intersect = app.add_subcommand("intersect", "Algebraic intersection number l.g");
  intersect->add_option("-g,--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  intersect->add_option("words", words, "Two words")->expected(2)->required();
  add_json(intersect);

  auto* bound = app.add_subcommand("degree-bound", "Lower bound on crossings of l and g");
  bound->add_option("-g,--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  bound->add_option("words", words, "Two words")->expected(2)->required();
  add_json(bound);

  auto* express = app.add_subcommand("express", "Linear expression modulo commutators");
  express->add_option("-g,--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  express->add_option("word", words, "Word")->expected(1)->required();
  add_json(express);

  auto* basis = app.add_subcommand("basis-check", "Change-of-basis matrix and verdict");
  basis->add_option("-g,--genus", genus, "Surface genus")->check(CLI::PositiveNumber);
  auto* th_opt = basis->add_option("--theta", theta, "theta words, in order");
  auto* ga_opt = basis->add_option("--gamma", gamma, "gamma words, in order");
  auto* mx_opt = basis->add_option("--matrix", matrix_arg, "Matrix JSON (inline or @path)");
  mx_opt->excludes(th_opt)->excludes(ga_opt);
  add_json(basis);

  auto* reduce = app.add_subcommand("diagram-reduce", "Remove bigons from a crossing diagram");
  reduce->add_option("diagram", input, "Diagram JSON (inline or @path)")->required();
  add_json(reduce);

  auto* pi1 = app.add_subcommand("pi1", "Presentation of pi1 from attaching words");
  pi1->add_option("-g,--genus", genus, "Genus; then give the k words")->check(CLI::PositiveNumber);
  pi1->add_option("inputs", words, "Attaching words, or one diagram file")->required();
  add_json(pi1);

  auto* classify_cmd = app.add_subcommand("classify", "Block decomposition and pi1 verdicts");
  classify_cmd->add_option("-g,--genus", genus, "Genus; then give the k words")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("inputs", words, "Attaching words, or one diagram file")->required();
  add_json(classify_cmd);

  auto* normalize_cmd = app.add_subcommand("cobordism-normalize", "Cancel critical point pairs");
  normalize_cmd->add_option("chain", input, "Chain JSON (inline or @path)")->required();
  add_json(normalize_cmd);

  auto* lens = app.add_subcommand("lens-table", "pi1 of genus-1 diagrams a1^q b1^p");
  lens->add_option("--pmin", pmin, "Smallest p")->check(CLI::PositiveNumber);
  lens->add_option("--pmax", pmax, "Largest p")->check(CLI::PositiveNumber);
  add_json(lens);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const WordOptions opts = options_from_env();

    if (intersect->parsed() || bound->parsed()) {
      CurveWord l = parse_word(resolve(words[0]), genus, opts);
      CurveWord g = parse_word(resolve(words[1]), genus, opts);
      if (intersect->parsed()) {
        const std::int64_t v = pairing(l, g);
        if (json) {
          out << Json{{"pairing", v}}.dump() << '\n';
        } else {
          out << v << '\n';
        }
      } else {
        const std::int64_t v = degree_lower_bound(l, g);
        if (json) {
          out << Json{{"degree_lower_bound", v}}.dump() << '\n';
        } else {
          out << v << '\n';
        }
      }
    } else if (express->parsed()) {
      CurveWord l = parse_word(resolve(words[0]), genus, opts);
      MuCoords mu = mu_coords(l);
      if (json) {
        out << Json{{"dot_alpha", mu.dot_alpha},
                    {"dot_beta", mu.dot_beta},
                    {"expression", linear_expression(l)}}
                   .dump()
            << '\n';
      } else {
        out << linear_expression(l) << '\n';
      }
    } else if (basis->parsed()) {
      BasisMatrix m;
      if (!matrix_arg.empty()) {
        m = basis_matrix_from_json(parse_json(resolve(matrix_arg)));
      } else {
        if (genus < 1) throw UsageError("basis-check needs -g with --theta/--gamma");
        std::vector<CurveWord> th;
        std::vector<CurveWord> ga;
        for (const auto& w : theta) th.push_back(parse_word(resolve(w), genus, opts));
        for (const auto& w : gamma) ga.push_back(parse_word(resolve(w), genus, opts));
        m = basis_matrix(BasisCandidate(genus, std::move(th), std::move(ga)));
      }
      BasisVerdict v = verify_basis(m);
      if (json) {
        out << Json{{"matrix", to_json(m)}, {"verdict", to_json(v)}}.dump() << '\n';
      } else {
        out << "H =\n";
        for (std::size_t r = 0; r < m.h.rows(); ++r) {
          out << "  " << join({m.h.row(r).begin(), m.h.row(r).end()}) << '\n';
        }
        out << "det = " << m.det << '\n' << "unimodular: " << yes_no(v.unimodular) << '\n';
        if (v.block_permutation) {
          std::vector<std::int64_t> s;
          for (int x : *v.block_permutation) s.push_back(x + 1);
          out << "sigma: " << join(s) << '\n' << "block dets: " << join(v.block_dets) << '\n';
        } else {
          out << "sigma: none\n";
        }
        out << v.diagnostics << '\n';
      }
    } else if (reduce->parsed()) {
      CrossingDiagram d = diagram_from_json(parse_json(resolve(input)));
      Reduction r = reduce_to_minimal(d);
      if (json) {
        out << to_json(r).dump() << '\n';
      } else {
        out << "crossings: " << r.diagram.size() << '\n'
            << "algebraic sum: " << r.diagram.algebraic_sum() << '\n'
            << "steps: " << r.steps << '\n';
        for (const auto& b : r.trace) out << "removed: " << b.p << ' ' << b.q << '\n';
      }
    } else if (pi1->parsed() || classify_cmd->parsed()) {
      HeegaardDiagram d = diagram_input(genus, words, opts);
      ClassificationReport rep = classify(d);
      if (pi1->parsed()) {
        Presentation p = presentation(d);
        if (json) {
          Json j = to_json(p);
          j.update(to_json(rep));
          out << j.dump() << '\n';
        } else {
          out << render(p) << '\n' << "pi1 = " << rep.pi1 << '\n';
        }
      } else if (json) {
        out << to_json(rep).dump() << '\n';
      } else {
        print_report(out, rep);
      }
    } else if (normalize_cmd->parsed()) {
      CobordismChain c = chain_from_json(parse_json(resolve(input)));
      Normalization n = normalize(c);
      if (json) {
        out << to_json(n).dump() << '\n';
      } else {
        for (const auto& m : n.moves) {
          out << "cancel " << m.lower << ' ' << m.upper << " (pairing " << m.pairing << ") -> "
              << type_text(m.type_after) << '\n';
        }
        out << "final type: " << type_text(n.chain.type()) << '\n';
      }
    } else if (lens->parsed()) {
      if (pmin > pmax) throw UsageError("--pmin exceeds --pmax");
      Json rows = Json::array();
      if (!json) out << "p q word pi1 finite prime\n";
      for (int p = pmin; p <= pmax; ++p) {
        for (int q = 1; q <= p; ++q) {
          if (std::gcd(p, q) != 1) continue;
          std::vector<Syllable> s{{{GenKind::alpha, 1}, q}, {{GenKind::beta, 1}, p}};
          HeegaardDiagram d{1, {CurveWord(1, std::move(s), false, opts)}};
          ClassificationReport rep = classify(d);
          const std::string word = render(d.attaching.front());
          if (json) {
            rows.push_back(Json{{"p", p},
                                {"q", q},
                                {"word", word},
                                {"pi1", rep.pi1},
                                {"finite", rep.finite},
                                {"prime", rep.prime}});
          } else {
            out << p << ' ' << q << " \"" << word << "\" " << rep.pi1 << ' '
                << yes_no(rep.finite) << ' ' << yes_no(rep.prime) << '\n';
          }
        }
      }
      if (json) out << rows.dump() << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace curvecal::cli
