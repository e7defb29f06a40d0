#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "hesselink/errors.hpp"
#include "hesselink/report.hpp"

namespace {

using namespace hesselink;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string polynomial_text(const std::string& poly, const std::string& file) {
  if (!poly.empty() && !file.empty())
    throw std::runtime_error("give either --poly or --file, not both");
  if (poly.empty() && file.empty())
    throw std::runtime_error("one of --poly or --file is required");
  return poly.empty() ? read_source(file) : poly;
}

// Candidate-points file: one point per line, dim+1 comma-separated
// rationals; blank lines are skipped.
std::vector<ProjectivePoint> read_point_file(const std::string& path,
                                             int dim) {
  std::vector<ProjectivePoint> out;
  std::stringstream lines(read_source(path));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RatVec coords;
    std::stringstream entries(line);
    std::string entry;
    while (std::getline(entries, entry, ',')) coords.push_back(parse_rational(entry));
    if (static_cast<int>(coords.size()) != dim + 1)
      throw std::runtime_error("point '" + line + "' needs " +
                               std::to_string(dim + 1) + " coordinates");
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::vector<ProjectivePoint> points_from_json(const nlohmann::json& arr,
                                              int dim) {
  std::vector<ProjectivePoint> out;
  for (const auto& entry : arr) {
    RatVec coords;
    for (const auto& c : entry) {
      if (c.is_string())
        coords.push_back(parse_rational(c.get<std::string>()));
      else
        coords.push_back(Rational(c.get<long>()));
    }
    if (static_cast<int>(coords.size()) != dim + 1)
      throw std::runtime_error("candidate point dimension mismatch");
    out.emplace_back(std::move(coords));
  }
  return out;
}

// Lines are either bare polynomials (analyzed with the global dimension,
// which must then be given) or JSON objects {"dim", "poly", ...} that carry
// their own dimension and per-line search overrides.
int run_batch(const std::string& path, int global_dim, bool timing) {
  std::string source = read_source(path);
  std::istringstream lines(source);
  std::string line;
  int lineno = 0;
  bool any_error = false;
  while (std::getline(lines, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    try {
      int dim = global_dim;
      std::string text;
      AnalyzeOptions opts;
      if (line[start] == '{') {
        nlohmann::json j = nlohmann::json::parse(line);
        dim = j.at("dim").get<int>();
        text = j.at("poly").get<std::string>();
        opts.search.budget = j.value("budget", 200);
        opts.search.seed = j.value("seed", static_cast<uint64_t>(0));
        opts.search.entry_bound = j.value("entry_bound", 3);
        if (j.contains("points"))
          opts.search.candidate_points = points_from_json(j["points"], dim);
        if (j.contains("shift")) {
          opts.with_degree_shift = true;
          opts.shift = j["shift"].get<int>();
        }
        opts.cap = j.value("cap", 1000000L);
      } else {
        if (dim < 1)
          throw std::runtime_error(
              "bare polynomial line needs a global --dim");
        text = line;
      }
      auto f = parse_polynomial(text, dim);
      std::cout << to_json(analyze(f, opts), timing) << "\n";
    } catch (const std::exception& e) {
      nlohmann::ordered_json err;
      err["error"] = e.what();
      err["line"] = lineno;
      std::cout << err.dump() << "\n";
      any_error = true;
    }
  }
  return any_error ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instability analysis for projective hypersurfaces"};
  app.require_subcommand(1);

  int dim = 1;
  std::string poly, file, points;
  int budget = 200;
  uint64_t seed = 0;
  int entry_bound = 3;
  int shift = 1;
  long cap = 1000000;
  bool json_out = false;
  bool timing = false;

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Search for a destabilizing frame and report stratum data");
  analyze_cmd->add_option("--dim", dim, "Ambient projective dimension r")
      ->required();
  analyze_cmd->add_option("--poly", poly, "Polynomial in x0..xr");
  analyze_cmd->add_option("--file", file, "Read the polynomial from a file ('-' = stdin)");
  analyze_cmd->add_option("--budget", budget, "Random coordinate frames to try");
  analyze_cmd->add_option("--seed", seed, "Random seed for the frame search");
  analyze_cmd->add_option("--entry-bound", entry_bound,
                          "Numerator/denominator bound for random entries");
  analyze_cmd->add_option(
      "--points", points,
      "File of extra candidate points, one per line as comma-separated "
      "rationals ('-' = stdin)");
  analyze_cmd->add_option("--shift", shift,
                          "Also verify the rescaling law at twist d + SHIFT");
  analyze_cmd->add_option("--cap", cap, "Column-tuple enumeration cap");
  analyze_cmd->add_flag("--json", json_out, "Machine-readable output");
  analyze_cmd->add_flag("--timing", timing,
                        "Include elapsed_ms in JSON output");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-shift",
      "Check that the squared instability distance rescales by C(r+D,r)^2 "
      "between twists d and d+D with the same subgroup class");
  verify_cmd->add_option("--dim", dim, "Ambient projective dimension r")
      ->required();
  verify_cmd->add_option("--poly", poly, "Polynomial in x0..xr");
  verify_cmd->add_option("--file", file, "Read the polynomial from a file ('-' = stdin)");
  verify_cmd->add_option("--shift", shift, "Twist shift D (default 1)");
  verify_cmd->add_option("--cap", cap, "Column-tuple enumeration cap");
  verify_cmd->add_flag("--json", json_out, "Machine-readable output");

  std::string batch_file = "-";
  int batch_dim = 0;
  CLI::App* batch_cmd = app.add_subcommand(
      "batch", "Analyze many inputs, one JSON report per line");
  batch_cmd->add_option(
      "--file", batch_file,
      "Input file ('-' = stdin): bare polynomials or JSON requests, one "
      "per line");
  batch_cmd->add_option("--dim", batch_dim,
                        "Ambient dimension for bare polynomial lines");
  batch_cmd->add_flag("--timing", timing, "Include elapsed_ms in each report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(analyze_cmd)) {
      auto f = parse_polynomial(polynomial_text(poly, file), dim);
      AnalyzeOptions opts;
      opts.search.budget = budget;
      opts.search.seed = seed;
      opts.search.entry_bound = entry_bound;
      if (!points.empty())
        opts.search.candidate_points = read_point_file(points, dim);
      opts.with_degree_shift = analyze_cmd->count("--shift") > 0;
      opts.shift = shift;
      opts.cap = cap;
      AnalysisReport report = analyze(f, opts);
      if (json_out)
        std::cout << to_json(report, timing) << "\n";
      else
        print_human(std::cout, report);
      return kExitOk;
    }
    if (app.got_subcommand(verify_cmd)) {
      auto f = parse_polynomial(polynomial_text(poly, file), dim);
      DegreeShiftReport report = verify_degree_shift(f, shift, cap);
      if (json_out)
        std::cout << to_json(report) << "\n";
      else
        print_human(std::cout, report);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    return run_batch(batch_file, batch_dim, timing);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
