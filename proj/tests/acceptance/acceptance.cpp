// Acceptance criteria 1-10. One PASS/FAIL line per criterion, plus indented
// detail lines. Exit status is nonzero if any criterion fails other than
// those listed in kKnownUnattainable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cxosc/bilateral.hpp"
#include "cxosc/fock.hpp"
#include "cxosc/realizations.hpp"
#include "cxosc/suites.hpp"
#include "cxosc/symbolic/normal_form.hpp"
#include "cxosc/symbolic/parser.hpp"
#include "cxosc/symbolic/prove.hpp"

using namespace cxosc;

namespace {

// Criterion 9 asks for the deviation to sit under (pi/lambda)^3/6, but the
// bracket is -2i sin(x) T, so the deviation is 2|x - sin x| ~ x^3/3.
const std::set<int> kKnownUnattainable{9};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      details.push_back("violated: " + what);
    }
  }
  void info(const std::string& line) { details.push_back(line); }
};

std::string fmt(const char* format, double value) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

RunConfig suite_config(const std::string& suite) {
  RunConfig config;
  config.suites = {suite};
  return config;
}

double max_residual(const std::vector<VerificationEntry>& entries, const std::string& candidate) {
  double out = 0.0;
  for (const auto& e : entries) {
    for (const auto& c : e.candidates) {
      if (c.name == candidate) {
        out = std::max(out, c.residual);
      }
    }
  }
  return out;
}

const Adjudication* find_adjudication(const std::vector<Adjudication>& all, const std::string& identity) {
  for (const auto& a : all) {
    if (a.identity == identity) {
      return &a;
    }
  }
  return nullptr;
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const auto entries = run_suite("gdoa", suite_config("gdoa"));
  const double elapsed = seconds_since(start);
  double worst = 0.0;
  for (const auto& e : entries) {
    worst = std::max(worst, e.min_residual());
    o.require(e.min_residual() <= 1e-12, e.identity + " at " + e.indices.dump());
  }
  o.require(entries.size() == 4 * 3 * 8, "4 lambdas x 3 draws x 8 identities");
  o.require(elapsed <= 10.0, "runtime <= 10 s");
  o.info(std::to_string(entries.size()) + " entries, max residual " + fmt("%.2e", worst) + ", " +
         fmt("%.2f s", elapsed));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto entries = run_suite("spectrum", suite_config("spectrum"));
  long grid = 0;
  long shifts = 0;
  for (const auto& e : entries) {
    if (e.identity.rfind("lambda=2", 0) == 0) {
      ++shifts;
      o.require(e.min_residual() <= 1e-10, "uniform shift at " + e.indices.dump());
    } else {
      ++grid;
      o.require(max_residual({e}, "alpha_form") <= 1e-10, "alpha-form spectrum at " + e.indices.dump());
    }
  }
  o.require(grid == 12 && shifts == 3, "12 grid points and 3 uniform-shift checks");
  o.info("alpha-form max |delta| " + fmt("%.2e", max_residual(entries, "alpha_form")) +
         ", gamma-literal max |delta| " + fmt("%.2e", max_residual(entries, "gamma_literal")) + " (reported only)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto entries = run_suite("ffz", suite_config("ffz"));
  for (const auto& e : entries) {
    o.require(e.min_residual() <= 1e-12, e.identity + " at " + e.indices.dump());
  }
  o.info(std::to_string(entries.size()) + " aggregated entries, max residual " +
         fmt("%.2e", max_residual(entries, "paper")));
  for (int lambda : {2, 3, 4, 5}) {
    RunConfig drawn;
    drawn.lambda = lambda;
    drawn.gamma = parameter_points(drawn, {lambda}).front().gamma();
    RunConfig bare = drawn;
    bare.gamma = std::vector<Complex>(static_cast<std::size_t>(lambda - 1));
    auto x = run_suite("ffz", drawn);
    const auto y = run_suite("ffz", bare);
    x.resize(y.size());  // drop the T_m(gamma) = T_m(0) entry
    bool identical = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
      identical = identical && x[i].candidates[0].residual == y[i].candidates[0].residual;
    }
    o.require(identical, "gamma-independence at lambda " + std::to_string(lambda));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  double slowest = 0.0;
  long proofs = 0;
  auto check = [&](const std::string& lhs, const std::string& rhs, int lambda) {
    const auto start = Clock::now();
    const auto status =
        symbolic::prove_identity(symbolic::parse(lhs, lambda), symbolic::parse(rhs, lambda), lambda);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    ++proofs;
    o.require(status.kind == symbolic::ProofKind::exact_group_ring,
              lhs + " = " + rhs + " (lambda " + std::to_string(lambda) + "): " + status.to_string());
    o.require(elapsed <= 1.0, lhs + " within 1 s");
  };
  for (int lambda = 2; lambda <= 5; ++lambda) {
    std::string deformation = "I";
    for (int r = 1; r < lambda; ++r) {
      deformation += " + g" + std::to_string(r) + "*K^" + std::to_string(r);
    }
    check("[a, ad]", deformation, lambda);
    for (int m = 1; m <= 6; ++m) {
      std::string factor = std::to_string(m);
      for (int r = 1; r < lambda; ++r) {
        std::string f = "1";
        for (int s = 1; s < m; ++s) {
          f += " + w^" + std::to_string(2 * r * s);
        }
        factor += " + (" + f + ")*g" + std::to_string(r) + "*K^" + std::to_string(r);
      }
      check("[a, ad^" + std::to_string(m) + "]", "ad^" + std::to_string(m - 1) + "*(" + factor + ")", lambda);
    }
  }
  for (int m = 1; m <= 6; ++m) {
    const std::string factor = "(" + std::to_string(m) + (m % 2 ? " + g1*K)" : ")");
    const std::string power = "ad^" + std::to_string(m - 1);
    check("[a, ad^" + std::to_string(m) + "]", factor + "*" + power, 2);
    check("[a, ad^" + std::to_string(m) + "]", power + "*" + factor, 2);
  }
  o.info(std::to_string(proofs) + " proofs, slowest " + fmt("%.4f s", slowest));
  return o;
}

Outcome criterion5() {
  Outcome o;
  RunConfig config = suite_config("utsl2");
  const auto entries = run_suite("utsl2", config);
  long triples = 0;
  std::set<std::string> signs;
  for (const auto& e : entries) {
    if (e.identity == "H*Hinv=Hinv*H=I") {
      ++triples;
      o.require(e.indices.value("exact", false), "exact H*Hinv = I at " + e.indices.dump());
    } else if (e.identity.rfind("H*X", 0) == 0) {
      o.require(e.min_residual() <= 1e-12, e.identity + " at " + e.indices.dump());
    } else {
      const auto matched = e.matched_candidates();
      o.require(matched.size() == 1, "exactly one sign of [X+,X-] at " + e.indices.dump());
      signs.insert(matched.empty() ? "none" : matched.front());
    }
  }
  o.require(triples == 10, "10 non-degenerate triples");
  o.require(signs.size() == 1, "one global sign");
  o.info(std::string("matching sign: ") + (signs.size() == 1 && *signs.begin() == "derived"
                                               ? "[X+,X-] = -(H-Hinv)/(t-1/t)"
                                               : "[X+,X-] = (H-Hinv)/(t-1/t)"));
  return o;
}

Outcome criterion6() {
  Outcome o;
  RunConfig config = suite_config("virasoro");
  const auto virasoro = run_suite("virasoro", config);
  const auto adjudications = adjudicate(virasoro);
  const auto* bracket = find_adjudication(adjudications, "[e_m,e_n]");
  o.require(bracket && bracket->unique(), "exactly one candidate matches at every grid point");
  o.require(bracket && bracket->points == 3 * 3 * 49, "3 lambdas x 3 draws x 49 index pairs");
  if (bracket) {
    o.info("candidate matching everywhere: " + bracket->verdict() + " over " + std::to_string(bracket->points) +
           " points");
  }
  long coincident = 0;
  for (const auto& e : virasoro) {
    if (e.identity == "[e_m,e_n]" && e.matched_candidates().size() > 1) {
      ++coincident;
    }
  }
  o.info(std::to_string(coincident) + " points where candidates coincide (m = n, or n = m mod lambda for B/C)");
  const auto* witt = find_adjudication(adjudications, "witt_limit");
  o.require(witt && witt->unique() && witt->verdict() == bracket->verdict(),
            "gamma = 0 bracket equals the Witt form (n-m) e_(m+n)");
  RunConfig lambda2;
  lambda2.lambda = 2;
  lambda2.suites = {"calogero"};
  double correction = 0.0;
  for (const auto& e : run_suite("calogero", lambda2)) {
    if (e.identity == "correction term after K reordering") {
      for (const auto& c : e.candidates) {
        if (c.name == "derived") correction = std::max(correction, c.residual);
      }
    }
  }
  o.require(correction <= 1e-10, "lambda=2 correction term equals -(1/2)((-1)^n-(-1)^m) g1 e_(m+n) K");
  o.info("lambda=2 reordered correction max residual " + fmt("%.2e", correction));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto entries = run_suite("emk", suite_config("emk"));
  const auto adjudications = adjudicate(entries);
  o.require(adjudications.size() == 1 && adjudications[0].unique(), "one exponent convention everywhere");
  for (const auto& e : entries) {
    o.require(e.matched_candidates().size() == 1, "exactly one convention at " + e.indices.dump());
  }
  if (!adjudications.empty()) {
    o.info("matching exponent: " + std::string(adjudications[0].verdict() == "derived" ? "m" : "m+1") + " over " +
           std::to_string(adjudications[0].points) + " points");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<int> letter(0, 2);
  double worst = 0.0;
  double largest = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int lambda = 2 + i % 4;
    const auto params = random_admissible(lambda, rng);
    const int len = length(rng);
    std::vector<int> word;
    std::string text;
    for (int k = 0; k < len; ++k) {
      word.push_back(letter(rng));
      text += (k ? "*" : "") + std::string(word.back() == 0 ? "a" : word.back() == 1 ? "ad" : "K");
    }
    const auto form = symbolic::normal_order(symbolic::parse(text, lambda), lambda);
    const int dim = 24;
    const auto fock = build_fock_rep(params, dim, NormalizationPolicy::module);
    const auto bilateral = build_bilateral(params, -16, 16);
    Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Identity(dim, dim);
    auto op = bilateral.identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it == 0) {
        matrix = fock.a * matrix;
        op = bilateral.a() * op;
      } else if (*it == 1) {
        matrix = fock.a_dag * matrix;
        op = bilateral.a_dag() * op;
      } else {
        matrix = fock.K * matrix;
        op = bilateral.K() * op;
      }
    }
    for (long n = 0; n < dim - 6; ++n) {
      Eigen::VectorXcd column = Eigen::VectorXcd::Zero(dim);
      for (const auto& [state, value] : symbolic::evaluate_on_state(form, n, params, symbolic::Semantics::fock)) {
        column(state) += value;
      }
      // coefficients reach ~1e8 for ad^6 at n ~ 17; compare at unit scale
      worst = std::max(worst, (column - matrix.col(n)).norm() / std::max(1.0, matrix.col(n).norm()));
      largest = std::max(largest, matrix.col(n).norm());
    }
    for (long n = -10; n <= 10; ++n) {
      std::map<long, Complex> column;
      for (const auto& [state, value] : symbolic::evaluate_on_state(form, n, params, symbolic::Semantics::bilateral)) {
        column[state] += value;
      }
      for (long state = -16; state <= 16; ++state) {
        const Complex expected = column.count(state) ? column[state] : Complex{};
        worst = std::max(worst, std::abs(expected - op.coefficient(state, n)) / std::max(1.0, std::abs(expected)));
        largest = std::max(largest, std::abs(expected));
      }
    }
  }
  o.require(worst <= 1e-12, "normal form action agrees with both matrix backends (|delta| / max(1, |value|))");
  o.info("100 words, max scaled discrepancy " + fmt("%.2e", worst) + ", largest coefficient " + fmt("%.2e", largest));
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<double> deviations;
  bool corrected = true;
  for (int lambda : {50, 100, 200}) {
    const auto rep = build_bilateral(AlgebraParams::undeformed(lambda));
    const double x = std::numbers::pi / lambda;
    const double deviation = classical_limit_deviation(rep, {1, 0}, {0, 1});
    deviations.push_back(deviation);
    const double bound = std::pow(x, 3) / 6.0 * (1.0 + 1e-6);
    o.require(deviation <= bound, "lambda " + std::to_string(lambda) + ": deviation " + fmt("%.6e", deviation) +
                                      " <= x^3/6 = " + fmt("%.6e", bound));
    corrected = corrected && deviation <= std::pow(x, 3) / 3.0 * (1.0 + 1e-6);
    o.info("lambda " + std::to_string(lambda) + ": deviation/(x^3/6) = " + fmt("%.6f", deviation / (std::pow(x, 3) / 6.0)));
  }
  const bool monotone = deviations[0] > deviations[1] && deviations[1] > deviations[2];
  o.require(monotone, "deviation shrinks monotonically with lambda");
  o.info(std::string("supplementary: deviation <= x^3/3 at all lambda: ") + (corrected ? "yes" : "no"));
  o.info(std::string("supplementary: monotone shrinkage: ") + (monotone ? "yes" : "no"));
  return o;
}

Outcome criterion10() {
  Outcome o;
  RunConfig config = suite_config("all");
  const auto start = Clock::now();
  const auto first = run_verification(config).to_json().dump(2);
  const double elapsed = seconds_since(start);
  const auto second = run_verification(config).to_json().dump(2);
  const auto doc = Json::parse(first);
  const auto problem = validate_report(doc);
  o.require(elapsed <= 120.0, "runtime <= 2 minutes");
  o.require(first == second, "byte-identical reports");
  o.require(problem.empty(), "schema-valid report: " + problem);
  o.info(std::to_string(doc["summary"]["total"].get<long>()) + " entries, " +
         std::to_string(doc["summary"]["fail"].get<long>()) + " failing, " + fmt("%.2f s", elapsed));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"GDOA relations on the D=64 grid", criterion1},
      {"closed-form spectrum vs diagonalization", criterion2},
      {"FFZ product law and sine commutator", criterion3},
      {"symbolic proofs in the exact ring", criterion4},
      {"U_t(sl(2)) realization", criterion5},
      {"deformed Virasoro adjudication", criterion6},
      {"[e_m,K] exponent adjudication", criterion7},
      {"cross-backend oracle", criterion8},
      {"classical limit bound", criterion9},
      {"full verification run", criterion10},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.info(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s\n", outcome.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str());
    for (const auto& line : outcome.details) {
      std::printf("    %s\n", line.c_str());
    }
    if (!outcome.pass) {
      if (kKnownUnattainable.count(id)) {
        std::printf("    known unattainable as stated; see README\n");
      } else {
        ++unexpected;
      }
    }
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
