#include "hesselink/report.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <ostream>

namespace hesselink {

namespace {

using nlohmann::ordered_json;

ordered_json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json json_rational(const Rational& q) { return fraction_string(q); }

ordered_json json_ratvec(const RatVec& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& q : v) arr.push_back(json_rational(q));
  return arr;
}

ordered_json json_subgroup(const OneParamSubgroup& lambda) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < lambda.n(); ++i) arr.push_back(json_integer(lambda[i]));
  return arr;
}

ordered_json json_monomial_vec(const Monomial& m) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < m.num_vars(); ++i) arr.push_back(m[i]);
  return arr;
}

ordered_json json_matrix(const GroupElement& g) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < g.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < g.n(); ++j) row.push_back(json_rational(g.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json json_analysis(const PolytopeAnalysis& analysis) {
  ordered_json j;
  j["twist"] = analysis.state.t();
  j["complement"] = json_integer(analysis.state.Q());
  ordered_json pts = ordered_json::array();
  for (const auto& m : analysis.state.points())
    pts.push_back(json_monomial_vec(m));
  j["points"] = pts;
  j["center"] = json_ratvec(analysis.center);
  j["nearest"] = json_ratvec(analysis.nearest);
  j["delta_squared"] = json_rational(analysis.delta_squared);
  if (analysis.lambda.has_value())
    j["lambda"] = json_subgroup(*analysis.lambda);
  else
    j["lambda"] = nullptr;
  j["mu"] = json_rational(Rational(analysis.mu));
  j["hull_weights"] = json_ratvec(analysis.weights);
  return j;
}

ordered_json json_degree_shift(const DegreeShiftReport& report) {
  ordered_json j;
  j["dim"] = report.r;
  j["degree"] = report.d;
  j["shift"] = report.D;
  j["unstable_at_base_degree"] = report.unstable_at_d;
  j["base"] = json_analysis(report.at_d);
  j["shifted"] = json_analysis(report.at_dD);
  j["expected_delta_squared"] = json_rational(report.expected_delta_squared);
  j["scaling_holds"] = report.scaling_holds;
  j["class_preserved"] = report.class_preserved;
  j["passed"] = report.passed();
  return j;
}

ordered_json json_report(const AnalysisReport& report, bool include_timing) {
  ordered_json j;
  j["input"] = {{"dim", report.r},
                {"degree", report.d},
                {"polynomial", report.polynomial}};

  ordered_json stratum;
  stratum["unstable"] = report.classification.unstable();
  stratum["verdict"] = report.classification.verdict;
  stratum["frames_examined"] = report.classification.frames_examined;
  if (report.classification.label.has_value()) {
    const StratumLabel& label = *report.classification.label;
    stratum["lambda_class"] = json_subgroup(label.lambda_class);
    stratum["delta_squared"] = json_rational(label.delta_squared);
    stratum["mu"] = json_rational(Rational(label.mu));
    stratum["witness_lambda"] = json_subgroup(label.witness_lambda);
    stratum["witness_g"] = json_matrix(label.witness_g);
  }
  j["stratum"] = stratum;

  j["multiplicity"] = {
      {"value", report.multiplicity.value},
      {"point", json_ratvec(report.multiplicity.point.coords())},
      {"moved_polynomial", serialize_polynomial(report.multiplicity.moved)}};

  if (report.bounds.has_value()) {
    const BoundsReport& b = *report.bounds;
    j["bounds"] = {{"lower", json_rational(b.lower)},
                   {"upper", json_rational(b.upper)},
                   {"lambda_class", json_subgroup(b.lambda_class)},
                   {"mu", json_rational(Rational(b.mu))},
                   {"min_weight", json_integer(b.min_weight)},
                   {"max_weight", json_integer(b.max_weight)}};
  }
  if (report.singularity.has_value()) {
    const SingularityCheck& s = *report.singularity;
    ordered_json sj;
    sj["applicable"] = s.applicable;
    sj["threshold"] = json_rational(s.threshold);
    if (s.applicable) {
      sj["lower"] = json_rational(s.lower);
      sj["implies_singular"] = s.implies_singular;
    }
    j["singularity"] = sj;
  }
  if (report.degree_shift.has_value())
    j["degree_shift"] = json_degree_shift(*report.degree_shift);

  ordered_json search;
  search["budget"] = report.budget;
  search["seed"] = report.seed;
  search["entry_bound"] = report.entry_bound;
  if (include_timing) search["elapsed_ms"] = report.elapsed_ms;
  j["search"] = search;

  ordered_json warnings = ordered_json::array();
  for (const auto& w : report.warnings) warnings.push_back(w);
  j["warnings"] = warnings;
  return j;
}

}  // namespace

AnalysisReport analyze(const HomogeneousPolynomial& f,
                       const AnalyzeOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport report{
      .r = f.r(),
      .d = f.degree(),
      .polynomial = serialize_polynomial(f),
      .classification = classify(f, opts.search),
      .multiplicity = max_multiplicity(f, opts.search.candidate_points),
  };
  if (report.classification.label.has_value()) {
    report.bounds =
        hesselink_bounds(*report.classification.label, f.degree(), f.r());
    report.singularity = check_singular_if_unstable(
        *report.classification.label, f.degree(), f.r());
  }
  if (opts.with_degree_shift)
    report.degree_shift = verify_degree_shift(f, opts.shift, opts.cap);
  report.budget = opts.search.budget;
  report.seed = opts.search.seed;
  report.entry_bound = opts.search.entry_bound;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string to_json(const AnalysisReport& report, bool include_timing) {
  return json_report(report, include_timing).dump();
}

std::string to_json(const DegreeShiftReport& report) {
  return json_degree_shift(report).dump();
}

void print_human(std::ostream& os, const AnalysisReport& report) {
  os << "input: dim " << report.r << ", degree " << report.d << "\n"
     << "  f = " << report.polynomial << "\n";
  if (report.classification.label.has_value()) {
    const StratumLabel& label = *report.classification.label;
    os << "stratum: UNSTABLE (certified)\n"
       << "  lambda class   " << label.lambda_class.str() << "\n"
       << "  delta^2        " << approx_string(label.delta_squared) << "\n"
       << "  mu             " << label.mu.get_str() << "\n"
       << "  witness lambda " << label.witness_lambda.str() << "\n"
       << "  witness g      " << label.witness_g.str() << "\n";
  } else {
    os << "stratum: no destabilizing subgroup found (budget "
       << report.budget << "); NOT a semistability certificate\n";
  }
  os << "  frames examined: " << report.classification.frames_examined << "\n";

  os << "multiplicity: " << report.multiplicity.value << " at "
     << report.multiplicity.point.str() << "\n"
     << "  moved polynomial: " << serialize_polynomial(report.multiplicity.moved)
     << "\n";

  if (report.bounds.has_value()) {
    os << "bounds: " << approx_string(report.bounds->lower)
       << " <= worst multiplicity <= " << approx_string(report.bounds->upper)
       << "\n";
  }
  if (report.singularity.has_value()) {
    if (!report.singularity->applicable) {
      os << "singularity: check not applicable (degree below dim + 1)\n";
    } else if (report.singularity->implies_singular) {
      os << "singularity: lower bound "
         << approx_string(report.singularity->lower) << " exceeds "
         << approx_string(report.singularity->threshold)
         << " -> hypersurface is singular\n";
    } else {
      os << "singularity: lower bound does not exceed "
         << approx_string(report.singularity->threshold) << "\n";
    }
  }
  if (report.degree_shift.has_value()) print_human(os, *report.degree_shift);
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  os << "elapsed: " << report.elapsed_ms << " ms\n";
}

void print_human(std::ostream& os, const DegreeShiftReport& report) {
  os << "degree shift check: d = " << report.d << " -> " << (report.d + report.D)
     << " (dim " << report.r << ")\n"
     << "  delta^2 at d      " << approx_string(report.at_d.delta_squared)
     << "\n"
     << "  delta^2 at d+D    " << approx_string(report.at_dD.delta_squared)
     << "\n"
     << "  expected rescale  " << approx_string(report.expected_delta_squared)
     << "\n"
     << "  scaling holds     " << (report.scaling_holds ? "yes" : "no") << "\n"
     << "  class preserved   " << (report.class_preserved ? "yes" : "no")
     << "\n";
  if (!report.unstable_at_d)
    os << "  note: input is torus-semistable at degree " << report.d
       << "; the identity is checked degenerately (0 -> 0)\n";
}

}  // namespace hesselink
