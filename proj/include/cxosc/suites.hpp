#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxosc/band_operator.hpp"
#include "cxosc/params.hpp"
#include "cxosc/report.hpp"

namespace cxosc {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kDefaultDraws = 3;

struct RunConfig {
  /// Unset: each suite sweeps its default λ list.
  std::optional<int> lambda;
  /// Unset: seeded random admissible draws. Requires lambda when set.
  std::optional<std::vector<Complex>> gamma;
  int dim = 64;
  Window window{-32, 32};
  /// Unset: per-suite default.
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> suites;
};

/// gdoa, spectrum, ffz, utsl2, virasoro, emk, calogero, symbolic, classical.
const std::vector<std::string>& suite_names();

double default_tolerance(const std::string& suite);

/// "re+imi;re+imi;..." for r = 1..λ−1; a bare real is accepted per entry.
/// Throws std::invalid_argument on malformed text or a wrong count.
std::vector<Complex> parse_gamma(std::string_view text, int lambda);
std::string format_gamma(const std::vector<Complex>& gamma);

/// "a..b" with a ≤ −8 and b ≥ 8.
Window parse_window(std::string_view text);

Json to_json(const RunConfig& config);

/// (λ, γ) points a suite runs over: the configured point, or kDefaultDraws
/// seeded draws per λ in `lambdas` (or per configured λ).
std::vector<AlgebraParams> parameter_points(const RunConfig& config, const std::vector<int>& lambdas);

std::vector<VerificationEntry> run_suite(const std::string& suite, const RunConfig& config);

/// Runs config.suites ("all" expands to every suite) in order.
VerificationReport run_verification(const RunConfig& config);

}  // namespace cxosc
