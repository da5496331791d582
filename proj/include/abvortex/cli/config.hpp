#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abvortex/flux.hpp"

namespace abvortex::cli {

inline constexpr const char* kToolName = "ab_vortex";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Subcommand { PhaseShift, CrossSection, Resonance, Hall, Sweep, Verify };
enum class OutputFormat { Csv, Json };
enum class SpecRuleKind { Fixed, EtaScaled };

/// Inclusive linear range "from:to:count".
struct SweepRange {
  double from = 0.0;
  double to = 0.0;
  std::size_t count = 1;

  std::vector<double> values() const;
  bool operator==(const SweepRange&) const = default;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Verify;

  std::optional<double> alpha;
  std::optional<double> energy;
  std::optional<double> e_bound_n;
  std::optional<double> e_bound_n1;

  double phi_min = kPi / 180.0;
  double phi_max = kPi;
  std::size_t phi_steps = 720;

  std::optional<double> n_v;
  std::optional<double> n_e;

  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;

  UnitSystem units = UnitSystem::Natural;
  double mass = 0.5;
  double hbar = 1.0;
  double hall_unit = 1.0;

  std::optional<long> l_min;
  std::optional<long> l_max;
  std::size_t quadrature_steps = 1u << 14;
  std::optional<double> bracket_lo;
  std::optional<double> bracket_hi;

  std::optional<SweepRange> sweep_alpha;
  std::optional<SweepRange> sweep_energy;
  SpecRuleKind spec_rule = SpecRuleKind::Fixed;

  std::optional<std::string> report_path;
  bool update_report = false;

  bool operator==(const RunConfig&) const = default;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses command-line arguments (without the program name).
RunConfig parse_config(const std::vector<std::string>& args);

const char* to_string(Subcommand s);

/// Ordered key/value echo of every field, used as file metadata.
std::vector<std::pair<std::string, std::string>> config_metadata(const RunConfig& cfg);

/// Inverse of config_metadata; unknown keys are ignored.
RunConfig config_from_metadata(const std::map<std::string, std::string>& meta);

}  // namespace abvortex::cli
