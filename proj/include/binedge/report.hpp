#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "binedge/graph.hpp"
#include "binedge/homology.hpp"
#include "binedge/prime_spectrum.hpp"
#include "binedge/verifier.hpp"

namespace binedge {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);
std::string format_name(OutputFormat f);
// "q" for the rationals, "p=P" for a prime field.
Field parse_field(const std::string& spec);
std::string field_spec(Field f);

struct Config {
  int spectrum_max_n = 24;
  int groebner_max_n = 12;
  int homology_max_n = 7;
  int verify_max_n = 6;
  int sweep_max_n = 6;
  int gluing_depth_max_n = 5;
  Field field;
  int threads = 1;
  OutputFormat format = OutputFormat::Json;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Reads a JSON object whose keys mirror the Config fields; unknown keys are rejected.
Config load_config(const std::string& path, Config base = {});
nlohmann::json config_json(const Config& c);

struct AnalysisReport {
  std::string graph_id;  // canonical graph6
  int n = 0;
  int edge_count = 0;
  std::vector<CutSet> cut_sets;
  std::vector<int> heights;
  std::optional<int> dimension;
  std::optional<bool> unmixed;
  std::optional<int> depth;
  std::optional<int> projective_dimension;
  std::optional<bool> is_cm;
  std::map<std::string, std::string> stages;  // stage -> "ran" or "skipped: size"
  std::map<std::string, long long> timings_ms;

  bool skipped_any() const;
};

// Spectrum always (within its cap), then Groebner and homology when within their caps.
AnalysisReport analyze(const Graph& g, const Config& config);
// One report per connected component, each in its own induced labeling.
std::vector<AnalysisReport> analyze_components(const Graph& g, const Config& config);

nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const TheoremCheck& c);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const SweepReport& r);

std::string render(const std::vector<AnalysisReport>& reports, const Config& config);
std::string render(const SuiteReport& report, const Config& config);
std::string render(const SweepReport& report, const Config& config);

}  // namespace binedge
