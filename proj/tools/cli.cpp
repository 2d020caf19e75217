#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cxosc/fock.hpp"
#include "cxosc/suites.hpp"
#include "cxosc/symbolic/normal_form.hpp"
#include "cxosc/symbolic/parser.hpp"
#include "cxosc/symbolic/prove.hpp"

namespace cxosc {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string number(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw UsageError("cannot write " + path);
  }
  file << text;
}

AlgebraParams params_from(int lambda, const std::string& gamma_text) {
  if (lambda < 2) {
    throw UsageError("--lambda must be >= 2");
  }
  if (gamma_text.empty()) {
    return AlgebraParams::undeformed(lambda);
  }
  return AlgebraParams(lambda, parse_gamma(gamma_text, lambda));
}

void report_parse_error(const std::string& text, const symbolic::ParseError& e, std::ostream& err) {
  err << "parse error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
}

/// Parses with caret reporting; rethrows as UsageError.
symbolic::Expr parse_or_report(const std::string& text, int lambda, std::ostream& err) {
  try {
    return symbolic::parse(text, lambda);
  } catch (const symbolic::ParseError& e) {
    report_parse_error(text, e, err);
    throw UsageError("");
  }
}

struct SpectrumOptions {
  int lambda = 0;
  std::string gamma;
  long levels = 10;
  int dim = 0;
  std::string format = "csv";
  std::string out;
};

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const auto params = params_from(o.lambda, o.gamma);
  const int dim = o.dim > 0 ? o.dim : std::max<int>({64, 2 * o.lambda, static_cast<int>(o.levels) + 1});
  if (o.levels < 1 || o.levels > dim - 1) {
    throw UsageError("--levels must be in 1..dim-1");
  }
  const auto rep = build_fock_rep(params, dim);
  const auto rows = spectrum_table(rep, o.levels);
  std::string text;
  if (o.format == "csv") {
    text = "n,k,mu,E_closed,E_diag,delta\n";
    for (const auto& r : rows) {
      text += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.mu) + "," +
              number(r.closed) + "," + number(r.diagonalized) + "," + number(r.delta) + "\n";
    }
  } else {
    Json doc;
    doc["lambda"] = o.lambda;
    doc["gamma"] = format_gamma(params.gamma());
    doc["dim"] = dim;
    doc["normalization"] = to_string(rep.normalization);
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"n", r.n}, {"k", r.k}, {"mu", r.mu}, {"E_closed", r.closed}, {"E_diag", r.diagonalized},
                      {"delta", r.delta}});
    }
    doc["rows"] = list;
    text = doc.dump(2) + "\n";
  }
  write_output(o.out, text, out);
  return kExitOk;
}

struct VerifyOptions {
  std::string suite;
  int lambda = 0;
  std::string gamma;
  int dim = 64;
  std::string window = "-32..32";
  double tol = 0.0;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (o.lambda != 0) {
    if (o.lambda < 2) {
      throw UsageError("--lambda must be >= 2");
    }
    config.lambda = o.lambda;
  }
  if (!o.gamma.empty()) {
    if (!config.lambda) {
      throw UsageError("--gamma needs --lambda");
    }
    config.gamma = parse_gamma(o.gamma, *config.lambda);
    AlgebraParams(*config.lambda, *config.gamma);
  }
  if (o.dim < 2 || o.dim > kMaxFockDim) {
    throw UsageError("--dim must be in 2.." + std::to_string(kMaxFockDim));
  }
  config.dim = o.dim;
  config.window = parse_window(o.window);
  if (o.tol < 0.0) {
    throw UsageError("--tol must be > 0");
  }
  if (o.tol > 0.0) {
    config.tol = o.tol;
  }
  config.seed = o.seed;
  const auto& names = suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  config.suites = {o.suite};
  const auto report = run_verification(config);
  write_output(o.out, report.to_json().dump(2) + "\n", out);
  err << o.suite << ": " << report.passed() << "/" << report.entries.size() << " entries pass\n";
  return report.all_pass() ? kExitOk : kExitFailure;
}

int cmd_normal_order(int lambda, const std::string& expr, const std::string& format, std::ostream& out,
                     std::ostream& err) {
  if (lambda < 2) {
    throw UsageError("--lambda must be >= 2");
  }
  const auto parsed = parse_or_report(expr, lambda, err);
  symbolic::NormalForm nf(lambda);
  try {
    nf = symbolic::normal_order(parsed, lambda);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    out << symbolic::to_json(nf).dump(2) << "\n";
  } else if (nf.is_zero()) {
    out << "0\n";
  } else {
    for (const auto& line : nf.lines()) {
      out << line << "\n";
    }
  }
  return kExitOk;
}

int cmd_prove(int lambda, std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  if (lambda < 2) {
    throw UsageError("--lambda must be >= 2");
  }
  if (args.size() == 3 && args[1] == "==") {
    args.erase(args.begin() + 1);
  }
  if (args.size() != 2) {
    throw UsageError("prove expects LHS RHS (optionally LHS == RHS)");
  }
  const auto lhs = parse_or_report(args[0], lambda, err);
  const auto rhs = parse_or_report(args[1], lambda, err);
  symbolic::ProofStatus status;
  try {
    status = symbolic::prove_identity(lhs, rhs, lambda);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  out << status.to_string() << "\n";
  return status.holds() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"C_lambda-extended oscillator algebra engine", "cxosc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  SpectrumOptions spectrum;
  auto* sp = app.add_subcommand("spectrum", "closed-form vs diagonalized spectrum of H0");
  sp->add_option("--lambda", spectrum.lambda, "order of the cyclic group")->required();
  sp->add_option("--gamma", spectrum.gamma, "g_1..g_(lambda-1) as re+imi;re+imi;...");
  sp->add_option("--levels", spectrum.levels, "number of states");
  sp->add_option("--dim", spectrum.dim, "Fock truncation");
  sp->add_option("--format", spectrum.format)->check(CLI::IsMember({"csv", "json"}));
  sp->add_option("--out", spectrum.out, "output file");

  VerifyOptions verify;
  auto* vp = app.add_subcommand("verify", "run a verification suite, emit a JSON report");
  vp->add_option("suite", verify.suite, "suite name or all")->required();
  vp->add_option("--lambda", verify.lambda);
  vp->add_option("--gamma", verify.gamma);
  vp->add_option("--dim", verify.dim);
  vp->add_option("--window", verify.window, "bilateral window a..b");
  vp->add_option("--tol", verify.tol);
  vp->add_option("--seed", verify.seed);
  vp->add_option("--out", verify.out);

  int no_lambda = 0;
  std::string no_expr;
  std::string no_format = "text";
  auto* np = app.add_subcommand("normal-order", "print the normal form ad^p a^q K^s of an expression");
  np->add_option("--lambda", no_lambda)->required();
  np->add_option("expr", no_expr)->required();
  np->add_option("--format", no_format)->check(CLI::IsMember({"text", "json"}));

  int pr_lambda = 0;
  std::string pr_first;
  std::string pr_second;
  std::string pr_third;
  auto* pp = app.add_subcommand("prove", "decide LHS = RHS in the algebra");
  pp->add_option("--lambda", pr_lambda)->required();
  // scalar positionals: a vector would read "[a,ad]" as a list
  pp->add_option("lhs", pr_first)->required();
  pp->add_option("rhs", pr_second)->required();
  pp->add_option("third", pr_third, "RHS when written LHS == RHS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sp) return cmd_spectrum(spectrum, out);
    if (*vp) return cmd_verify(verify, out, err);
    if (*np) return cmd_normal_order(no_lambda, no_expr, no_format, out, err);
    if (*pp) {
      std::vector<std::string> sides{pr_first, pr_second};
      if (pp->count("third") > 0) {
        sides.push_back(pr_third);
      }
      return cmd_prove(pr_lambda, sides, out, err);
    }
  } catch (const UsageError& e) {
    if (*e.what() != '\0') {
      err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cxosc
