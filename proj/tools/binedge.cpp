#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "binedge/catalog.hpp"
#include "binedge/groebner.hpp"
#include "binedge/io.hpp"
#include "binedge/parallel.hpp"
#include "binedge/prime_spectrum.hpp"
#include "binedge/report.hpp"

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kCap = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

binedge::Graph load_graph(const std::string& path, bool graph6) {
  const auto text = read_input(path);
  return graph6 ? binedge::parse_graph6(text) : binedge::parse_edgelist(text);
}

void require_connected(const binedge::Graph& g) {
  if (!binedge::is_connected(g)) throw InputError("graph is not connected");
}

int cmd_gb(const binedge::Graph& g, const binedge::Config& config) {
  require_connected(g);
  if (g.vertex_count() > config.groebner_max_n) throw CapError("graph exceeds the groebner cap");
  const binedge::Ring ring{g.vertex_count()};
  const auto basis = binedge::reduce_basis(ring, binedge::gb_from_admissible_paths(g).generators);
  const auto ini = binedge::initial_ideal(basis);
  if (config.format == binedge::OutputFormat::Json) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& f : basis.generators) gens.push_back(f.to_string(ring));
    nlohmann::json lead = nlohmann::json::array();
    for (const auto& m : ini) lead.push_back(m.to_string(ring));
    std::cout << nlohmann::json{{"graph_id", binedge::canonical_form(g).graph6}, {"initial_ideal", lead},
                                {"reduced_basis", gens}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& f : basis.generators) std::cout << f.to_string(ring) << '\n';
    std::cout << (config.format == binedge::OutputFormat::Csv ? "" : "initial ideal:");
    for (const auto& m : ini) std::cout << ' ' << m.to_string(ring);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_primes(const binedge::Graph& g, const binedge::Config& config) {
  require_connected(g);
  if (g.vertex_count() > config.spectrum_max_n) throw CapError("graph exceeds the spectrum cap");
  const auto s = binedge::spectrum(g);
  if (config.format == binedge::OutputFormat::Json) {
    nlohmann::json cuts = nlohmann::json::array();
    for (const auto& p : s.primes)
      cuts.push_back({{"components", p.cut_set.component_count}, {"height", p.height}, {"vertices", p.cut_set.t.to_vector()}});
    std::cout << nlohmann::json{{"cut_sets", cuts}, {"dimension", s.dimension},
                                {"graph_id", binedge::canonical_form(g).graph6}, {"unmixed", s.unmixed}}
                     .dump(2)
              << '\n';
  } else {
    const char* sep = config.format == binedge::OutputFormat::Csv ? "," : " ";
    if (config.format == binedge::OutputFormat::Csv) std::cout << "cut_set,components,height\n";
    for (const auto& p : s.primes)
      std::cout << (config.format == binedge::OutputFormat::Csv ? "\"" + p.cut_set.t.to_string() + "\""
                                                                 : p.cut_set.t.to_string())
                << sep << p.cut_set.component_count << sep << p.height << '\n';
    if (config.format == binedge::OutputFormat::Text)
      std::cout << "dimension " << s.dimension << ", unmixed " << (s.unmixed ? "true" : "false") << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binedge: binomial edge ideals of small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string field;
  std::string format;
  int threads = 0;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--field", field, "coefficient field: q or p=P");
  app.add_option("--format", format, "output format: json, csv or text");
  app.add_option("--threads", threads, "worker threads (default BINEDGE_THREADS or 1)");

  std::string input = "-";
  bool graph6 = false;
  auto* analyze = app.add_subcommand("analyze", "cut sets, dimension, depth and Cohen-Macaulayness of a graph");
  analyze->add_option("input", input, "edge-list file or - for stdin");
  analyze->add_flag("--graph6", graph6, "input is graph6");

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis and initial ideal");
  gb->add_option("input", input, "edge-list file or - for stdin");
  gb->add_flag("--graph6", graph6, "input is graph6");

  auto* primes = app.add_subcommand("primes", "cut sets, heights, dimension and unmixedness");
  primes->add_option("input", input, "edge-list file or - for stdin");
  primes->add_flag("--graph6", graph6, "input is graph6");

  std::string suite;
  int n_max = 0;
  auto* verify = app.add_subcommand("verify", "run theorem checks over the graph catalog");
  verify->add_option("suite", suite, "all, gluing, tree, cone, chordal or groebner")->required();
  verify->add_option("--n-max", n_max, "largest catalog graph")->required();

  auto* sweep = app.add_subcommand("sweep", "cone conjecture sweep over connected graphs");
  sweep->add_option("--n-max", n_max, "largest base graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    binedge::Config config;
    config.threads = binedge::default_thread_count();
    if (!config_path.empty()) config = binedge::load_config(config_path, config);
    if (!field.empty()) config.field = binedge::parse_field(field);
    if (!format.empty()) config.format = binedge::parse_format(format);
    if (threads > 0) config.threads = threads;

    if (*analyze) {
      const auto g = load_graph(input, graph6);
      const auto reports = binedge::analyze_components(g, config);
      std::cout << binedge::render(reports, config);
      for (const auto& r : reports)
        if (r.skipped_any()) return kCap;
      return kOk;
    }
    if (*gb) return cmd_gb(load_graph(input, graph6), config);
    if (*primes) return cmd_primes(load_graph(input, graph6), config);
    binedge::VerifyOptions options{config.field, config.threads, config.gluing_depth_max_n};
    if (*verify) {
      if (n_max < 1) throw InputError("--n-max must be positive");
      if (n_max > config.verify_max_n) throw CapError("--n-max exceeds verify_max_n");
      const auto report = binedge::run_suite(suite, n_max, options);
      std::cout << binedge::render(report, config);
      return report.passed() ? kOk : kFailed;
    }
    if (*sweep) {
      if (n_max < 1) throw InputError("--n-max must be positive");
      if (n_max > config.sweep_max_n) throw CapError("--n-max exceeds sweep_max_n");
      const auto report = binedge::conjecture_sweep(n_max, options);
      std::cout << binedge::render(report, config);
      return report.counterexamples.empty() ? kOk : kFailed;
    }
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const binedge::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
