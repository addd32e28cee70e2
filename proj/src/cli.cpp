#include "trilie/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/verify.hpp"

namespace trilie {

namespace {

struct Config {
  std::size_t n = 0;
  unsigned order = kDefaultSeriesOrder;
  std::string format = "text";
  std::uint64_t seed = 42;
  unsigned degree = 3;
  std::string suite = "all";
};

std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + arg.substr(1) + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

std::string gnelem_text(const GnElem& g) {
  std::ostringstream o;
  auto list = [](const std::vector<Rat>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + print(v[i]);
    return s + "]";
  };
  o << "form: " << (g.form() == GnForm::A ? "A" : "B") << "\n";
  o << "t: " << list(g.t()) << "\n";
  o << "tau: " << print(g.tau()) << "\n";
  if (g.form() == GnForm::A) o << "s: " << list(g.s()) << "\n";
  o << "f: " << print(g.f()) << "  (D = d" << g.f().var() << ", order " << g.f().order() << ")\n";
  for (std::size_t k = 0; k < g.e().size(); ++k)
    o << "s" << k + 2 << ": " << print(g.e()[k]) << "  (D = d" << k + 1 << ", order "
      << g.e()[k].order() << ")\n";
  return o.str();
}

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(const std::string& text) {
    if (cfg_.format == "json") {
      out_ << nlohmann::json{{"result", text}}.dump() << "\n";
    } else {
      out_ << text << "\n";
    }
  }

  void emit(const GnElem& g) {
    if (cfg_.format == "json") {
      out_ << print_gnelem_json(g) << "\n";
    } else {
      out_ << gnelem_text(g);
    }
  }

  std::size_t rank(std::initializer_list<std::string_view> texts) const {
    if (cfg_.n != 0) return cfg_.n;
    std::size_t n = 2;
    for (auto t : texts) n = std::max(n, infer_rank(t));
    return n;
  }

  GnElem gnelem(const std::string& text) const {
    GnElem g = parse_gnelem_json(text);
    if (cfg_.n != 0 && cfg_.n != g.rank())
      throw DomainError("--n " + std::to_string(cfg_.n) + " disagrees with the element's rank");
    return g;
  }

  const Config& cfg_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact computation in the Lie algebra u_n of triangular derivations and its "
               "automorphism group"};
  app.name("trilie");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", cfg.n, "Rank n (0 infers it from the input)")->check(CLI::Range(0, 16));
  app.add_option("--order", cfg.order, "Series truncation order")->check(CLI::Range(1, 4096));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for verify");

  std::vector<std::string> pos;
  auto sub = [&](const char* name, const char* help, const char* args_name, int count) {
    CLI::App* s = app.add_subcommand(name, help);
    if (count != 0)
      s->add_option("args", pos, std::string(args_name) + " (\"@file\" reads a file)")
          ->expected(count < 0 ? -1 : count)
          ->allow_extra_args(count < 0)
          ->required();
    return s;
  };
  sub("bracket", "Lie bracket [u, v]", "u v", 2);
  sub("exp", "Exponential of a derivation", "u", 1);
  sub("log", "Logarithm of a unipotent automorphism", "sigma", 1);
  sub("conjugate", "sigma u sigma^{-1}", "sigma u", 2);
  sub("reconstruct", "Automorphism from commuting frames", "frames", -1);
  sub("act", "Apply a G_n element", "g u", 2);
  sub("decompose", "Canonical decomposition of a G_n element or a conjugation", "g", 1);
  sub("mul", "Product of two G_n elements", "g h", 2);
  sub("inv", "Inverse of a G_n element", "g", 1);
  sub("ord", "Ordinal degree", "u", 1);
  sub("ideal", "Membership of u in the ideal I_lambda", "u lambda", 2);
  sub("center", "Centre of u_n at bounded degree", "", 0)
      ->add_option("--degree", cfg.degree, "Degree bound")
      ->check(CLI::Range(1, 12));
  sub("verify", "Run the acceptance identities", "", 0)
      ->add_option("--suite", cfg.suite, "all, bracket, group, decompose or dsl");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Runner r(cfg, out);
  try {
    std::vector<std::string> a;
    for (const auto& p : pos) a.push_back(load(p));

    if (cmd == "bracket") {
      const std::size_t n = r.rank({a[0], a[1]});
      r.emit(print(bracket(parse_lie(a[0], n), parse_lie(a[1], n))));
    } else if (cmd == "exp") {
      r.emit(print(exp_map(parse_lie(a[0], r.rank({a[0]})))));
    } else if (cmd == "log") {
      r.emit(print(log_map(parse_triaut(a[0], cfg.n))));
    } else if (cmd == "conjugate") {
      const TriAut s = parse_triaut(a[0], cfg.n);
      r.emit(print(conjugate_derivation(s, parse_lie(a[1], s.rank()))));
    } else if (cmd == "reconstruct") {
      const std::size_t n = cfg.n != 0 ? cfg.n : a.size();
      std::vector<LieElem> frames;
      for (const auto& f : a) frames.push_back(parse_lie(f, n));
      r.emit(print(reconstruct_from_frames(frames)));
    } else if (cmd == "act") {
      const GnElem g = r.gnelem(a[0]);
      r.emit(print(act(g, parse_lie(a[1], g.rank()))));
    } else if (cmd == "decompose") {
      if (looks_like_json(a[0])) {
        r.emit(decompose(action_of(r.gnelem(a[0])), cfg.order));
      } else {
        r.emit(decompose(conjugation_action(parse_triaut(a[0], cfg.n)), cfg.order));
      }
    } else if (cmd == "mul") {
      const GnElem g = convert_form(r.gnelem(a[0]), GnForm::B);
      const GnElem h = convert_form(r.gnelem(a[1]), GnForm::B);
      r.emit(multiply_formula(g, h));
    } else if (cmd == "inv") {
      r.emit(gn_inverse(r.gnelem(a[0])));
    } else if (cmd == "ord") {
      r.emit(print(ord_of_element(parse_lie(a[0], r.rank({a[0]})))));
    } else if (cmd == "ideal") {
      const OrdinalCNF lambda = parse_ordinal(a[1]);
      r.emit(ideal_membership(parse_lie(a[0], r.rank({a[0]})), lambda) ? "true" : "false");
    } else if (cmd == "center") {
      if (cfg.n < 2) throw DomainError("center needs --n with n >= 2");
      std::string text;
      for (const auto& u : center_solve(cfg.n, cfg.degree)) text += (text.empty() ? "" : "\n") + print(u);
      r.emit(text);
    } else if (cmd == "verify") {
      const auto results = run_verify(cfg.suite, cfg.seed);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& x) { return x.pass; });
      if (cfg.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& x : results)
          j.push_back({{"id", x.id}, {"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
        out << nlohmann::json{{"criteria", j}, {"pass", ok}}.dump() << "\n";
      } else {
        for (const auto& x : results) out << format_result(x) << "\n";
      }
      return ok ? kExitOk : kExitVerify;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SeriesOrderError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSeriesOrder;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace trilie
