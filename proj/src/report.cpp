#include "binedge/report.hpp"

#include <chrono>
#include <type_traits>
#include <fstream>
#include <sstream>

#include "binedge/catalog.hpp"
#include "binedge/groebner.hpp"

namespace binedge {

namespace {

using nlohmann::json;

template <class F>
long long timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string text_of(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "true" : "false";
  else
    return std::to_string(*v);
}

std::string cut_set_text(const std::vector<CutSet>& cs) {
  std::string s;
  for (std::size_t k = 0; k < cs.size(); ++k) s += (k ? " " : "") + cs[k].t.to_string();
  return s;
}

constexpr const char* kRan = "ran";
constexpr const char* kSkipped = "skipped: size";

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ConfigError("unknown output format '" + name + "'");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "json";
}

Field parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (spec.rfind("p=", 0) == 0) {
    try {
      return Field::prime(std::stol(spec.substr(2)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad field '" + spec + "': " + e.what());
    } catch (const std::out_of_range&) {
      throw ConfigError("bad field '" + spec + "'");
    }
  }
  throw ConfigError("field must be 'q' or 'p=P', got '" + spec + "'");
}

std::string field_spec(Field f) { return f.characteristic == 0 ? "q" : "p=" + std::to_string(f.characteristic); }

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config " + path + " must hold a JSON object");
  auto positive = [&](const std::string& key, const json& v) {
    if (!v.is_number_integer() || v.get<int>() < 1) throw ConfigError("config key '" + key + "' must be a positive integer");
    return v.get<int>();
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "spectrum_max_n") base.spectrum_max_n = positive(key, v);
    else if (key == "groebner_max_n") base.groebner_max_n = positive(key, v);
    else if (key == "homology_max_n") base.homology_max_n = positive(key, v);
    else if (key == "verify_max_n") base.verify_max_n = positive(key, v);
    else if (key == "sweep_max_n") base.sweep_max_n = positive(key, v);
    else if (key == "gluing_depth_max_n") base.gluing_depth_max_n = positive(key, v);
    else if (key == "threads") base.threads = positive(key, v);
    else if (key == "field" && v.is_string()) base.field = parse_field(v.get<std::string>());
    else if (key == "format" && v.is_string()) base.format = parse_format(v.get<std::string>());
    else throw ConfigError("unknown or ill-typed config key '" + key + "'");
  }
  if (base.spectrum_max_n > kMaxVertices || base.groebner_max_n > kMaxVars / 2)
    throw ConfigError("stage caps exceed the supported graph size");
  return base;
}

json config_json(const Config& c) {
  return json{{"field", field_spec(c.field)},           {"format", format_name(c.format)},
              {"gluing_depth_max_n", c.gluing_depth_max_n},
              {"groebner_max_n", c.groebner_max_n},     {"homology_max_n", c.homology_max_n},
              {"spectrum_max_n", c.spectrum_max_n},     {"sweep_max_n", c.sweep_max_n},
              {"threads", c.threads},                   {"verify_max_n", c.verify_max_n}};
}

bool AnalysisReport::skipped_any() const {
  for (const auto& [_, state] : stages)
    if (state != kRan) return true;
  return false;
}

AnalysisReport analyze(const Graph& g, const Config& config) {
  if (!is_connected(g)) throw GraphError("analyze expects a connected graph; use analyze_components");
  AnalysisReport r;
  r.graph_id = canonical_form(g).graph6;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  const int n = g.vertex_count();

  if (n <= config.spectrum_max_n) {
    r.timings_ms["spectrum"] = timed([&] {
      const auto s = spectrum(g);
      for (const auto& p : s.primes) {
        r.cut_sets.push_back(p.cut_set);
        r.heights.push_back(p.height);
      }
      r.dimension = s.dimension;
      r.unmixed = s.unmixed;
    });
    r.stages["spectrum"] = kRan;
  } else {
    r.stages["spectrum"] = kSkipped;
  }

  const bool groebner_ok = n <= config.groebner_max_n;
  r.stages["groebner"] = groebner_ok ? kRan : kSkipped;
  if (groebner_ok) r.timings_ms["groebner"] = timed([&] { (void)gb_from_admissible_paths(g); });

  const bool homology_ok = groebner_ok && r.dimension && n <= config.homology_max_n;
  r.stages["homology"] = homology_ok ? kRan : kSkipped;
  if (homology_ok) {
    r.timings_ms["homology"] = timed([&] {
      DepthOptions options;
      options.max_vertices = config.homology_max_n;
      options.field = config.field;
      const auto d = depth_of_quotient(g, options);
      r.depth = d.depth;
      r.projective_dimension = d.projective_dimension;
      r.is_cm = d.is_cm;
    });
  }
  return r;
}

std::vector<AnalysisReport> analyze_components(const Graph& g, const Config& config) {
  std::vector<AnalysisReport> out;
  if (g.vertex_count() == 0) throw GraphError("empty graph");
  for (VertexSet comp : connected_components(g)) out.push_back(analyze(induced_subgraph(g, comp).graph, config));
  return out;
}

json to_json(const AnalysisReport& r) {
  json cuts = json::array();
  for (const auto& c : r.cut_sets) cuts.push_back(json{{"components", c.component_count}, {"vertices", c.t.to_vector()}});
  return json{{"cut_sets", cuts},
              {"depth", optional_json(r.depth)},
              {"dimension", optional_json(r.dimension)},
              {"edge_count", r.edge_count},
              {"graph_id", r.graph_id},
              {"heights", r.heights},
              {"is_cm", optional_json(r.is_cm)},
              {"n", r.n},
              {"projective_dimension", optional_json(r.projective_dimension)},
              {"route", r.depth ? json(DepthResult{}.route) : json(kSkipped)},
              {"stages", r.stages},
              {"timings_ms", r.timings_ms},
              {"unmixed", optional_json(r.unmixed)}};
}

json to_json(const TheoremCheck& c) {
  return json{{"computed", c.computed}, {"expected", c.expected}, {"instance", c.instance}, {"pass", c.pass},
              {"theorem_id", c.theorem_id}};
}

json to_json(const SuiteReport& r) {
  std::map<std::string, std::pair<int, int>> tally;
  json failures = json::array();
  for (const auto& c : r.checks) {
    auto& [run, failed] = tally[c.theorem_id];
    ++run;
    if (!c.pass) {
      ++failed;
      failures.push_back(to_json(c));
    }
  }
  json by_theorem = json::object();
  for (const auto& [id, counts] : tally) by_theorem[id] = json{{"checks", counts.first}, {"failures", counts.second}};
  return json{{"by_theorem", by_theorem}, {"checks", r.checks.size()}, {"failures", failures},
              {"n_max", r.n_max},         {"passed", r.passed()},       {"suite", r.suite}};
}

json to_json(const SweepReport& r) {
  json unmixed = json::array();
  for (const auto& e : r.entries) {
    if (!e.unmixed) continue;
    unmixed.push_back(json{{"complete", e.complete}, {"depth", e.depth}, {"dimension", e.dimension}, {"h", e.h},
                           {"h_cm", e.h_cm}, {"is_cm", e.cm}, {"n", e.n}});
  }
  return json{{"cm_cones", r.cm_count()},
              {"cm_over_non_cm_h", r.cm_over_non_cm},
              {"cones", r.entries.size()},
              {"counterexamples", r.counterexamples},
              {"n_max", r.n_max},
              {"unmixed_cones", unmixed}};
}

std::string render(const std::vector<AnalysisReport>& reports, const Config& config) {
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << json{{"config", config_json(config)}, {"reports", arr}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "graph_id,n,edge_count,cut_sets,heights,dimension,unmixed,depth,projective_dimension,is_cm,route\n";
      for (const auto& r : reports) {
        std::string heights;
        for (std::size_t k = 0; k < r.heights.size(); ++k) heights += (k ? " " : "") + std::to_string(r.heights[k]);
        os << csv_cell(r.graph_id) << ',' << r.n << ',' << r.edge_count << ',' << csv_cell(cut_set_text(r.cut_sets)) << ','
           << heights << ',' << text_of(r.dimension) << ',' << text_of(r.unmixed) << ',' << text_of(r.depth) << ','
           << text_of(r.projective_dimension) << ',' << text_of(r.is_cm) << ','
           << (r.depth ? DepthResult{}.route : std::string(kSkipped)) << '\n';
      }
      break;
    case OutputFormat::Text:
      for (const auto& r : reports) {
        os << "graph " << r.graph_id << "  n=" << r.n << " edges=" << r.edge_count << '\n';
        os << "  cut sets: " << cut_set_text(r.cut_sets) << '\n';
        os << "  dimension " << text_of(r.dimension) << ", unmixed " << text_of(r.unmixed) << '\n';
        if (r.depth)
          os << "  depth " << *r.depth << ", pd " << *r.projective_dimension << ", cohen-macaulay " << text_of(r.is_cm) << '\n';
        for (const auto& [stage, state] : r.stages)
          if (state != kRan) os << "  " << stage << ": " << state << '\n';
      }
      break;
  }
  return os.str();
}

std::string render(const SuiteReport& report, const Config& config) {
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::Json: {
      json j = to_json(report);
      j["config"] = config_json(config);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "theorem_id,instance,expected,computed,pass\n";
      for (const auto& c : report.checks)
        os << c.theorem_id << ',' << csv_cell(c.instance) << ',' << csv_cell(c.expected) << ',' << csv_cell(c.computed) << ','
           << (c.pass ? "true" : "false") << '\n';
      break;
    case OutputFormat::Text:
      for (const auto& c : report.checks)
        if (!c.pass) os << "FAIL " << c.theorem_id << " " << c.instance << "\n  expected " << c.expected << "\n  computed " << c.computed << '\n';
      os << report.suite << " n-max " << report.n_max << ": " << report.checks.size() << " checks, "
         << report.failure_count() << " failures\n";
      break;
  }
  return os.str();
}

std::string render(const SweepReport& report, const Config& config) {
  std::ostringstream os;
  switch (config.format) {
    case OutputFormat::Json: {
      json j = to_json(report);
      j["config"] = config_json(config);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "h,n,complete,unmixed,depth,dimension,is_cm\n";
      for (const auto& e : report.entries)
        os << csv_cell(e.h) << ',' << e.n << ',' << (e.complete ? "true" : "false") << ',' << (e.unmixed ? "true" : "false")
           << ',' << (e.depth_computed ? std::to_string(e.depth) : "") << ',' << e.dimension << ','
           << (e.cm ? "true" : "false") << '\n';
      break;
    case OutputFormat::Text:
      for (const auto& h : report.counterexamples) os << "COUNTEREXAMPLE cone over " << h << '\n';
      for (const auto& h : report.cm_over_non_cm) os << "note: CM cone over non-CM " << h << '\n';
      os << "sweep n-max " << report.n_max << ": " << report.entries.size() << " cones, " << report.unmixed_count()
         << " unmixed, " << report.cm_count() << " cohen-macaulay, " << report.counterexamples.size()
         << " counterexamples\n";
      break;
  }
  return os.str();
}

}  // namespace binedge
