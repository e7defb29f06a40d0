#include "hesselink/instability.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hesselink/errors.hpp"

namespace hesselink {

namespace {

// std::uniform_int_distribution is implementation-defined, so results would
// differ across standard libraries. Raw modulo keeps the stream portable;
// the slight bias is irrelevant for a search heuristic.
long next_long(std::mt19937_64& rng, long lo, long hi) {
  unsigned long span = static_cast<unsigned long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

GroupElement random_invertible(std::mt19937_64& rng, int n, int bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<RatVec> rows(static_cast<size_t>(n),
                             RatVec(static_cast<size_t>(n)));
    for (auto& row : rows)
      for (auto& entry : row) {
        long num = next_long(rng, -bound, bound);
        long den = next_long(rng, 1, bound);
        entry = make_rational(Integer(num), Integer(den));
      }
    if (determinant(rows) != 0) return GroupElement(std::move(rows));
  }
  throw std::logic_error("random matrix generation kept hitting singulars");
}

GroupElement random_unit_lower_triangular(std::mt19937_64& rng, int n,
                                          int bound) {
  std::vector<RatVec> rows(static_cast<size_t>(n),
                           RatVec(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int j = 0; j < i; ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          next_long(rng, -bound, bound);
  }
  return GroupElement(std::move(rows));
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

struct Incumbent {
  Rational delta_squared{0};
  std::optional<StratumLabel> label;

  // Larger squared distance wins; ties prefer the lexicographically smaller
  // class, then the smaller canonical witness rendering. Fully deterministic.
  void offer(const PolytopeAnalysis& analysis, const GroupElement& g) {
    if (!analysis.unstable()) return;
    OneParamSubgroup cls = canonical_class_rep(*analysis.lambda);
    if (label.has_value()) {
      if (analysis.delta_squared < delta_squared) return;
      if (analysis.delta_squared == delta_squared) {
        if (label->lambda_class < cls) return;
        if (label->lambda_class == cls && label->witness_g.str() <= g.str())
          return;
      }
    }
    delta_squared = analysis.delta_squared;
    label = StratumLabel{cls, analysis.delta_squared, analysis.mu,
                         *analysis.lambda, g};
  }
};

// Independent recomputation of every certified quantity in the label.
// classify refuses to return anything this check rejects.
void recheck_label(const HomogeneousPolynomial& f, const StratumLabel& label) {
  HomogeneousPolynomial moved = act(label.witness_g, f);
  Integer m = mu(moved, label.witness_lambda);
  if (m != label.mu || m <= 0)
    throw std::logic_error("stratum certificate: mu mismatch");
  if (Rational(m) * Rational(m) !=
      label.delta_squared * Rational(label.witness_lambda.norm_squared()))
    throw std::logic_error("stratum certificate: duality mismatch");
  if (!(canonical_class_rep(label.witness_lambda) == label.lambda_class))
    throw std::logic_error("stratum certificate: class mismatch");
  if (!label.witness_lambda.sum_is_zero())
    throw std::logic_error("stratum certificate: witness not SL-normalized");
}

}  // namespace

GroupElement move_point_to_e(const ProjectivePoint& y) {
  const RatVec& b = y.coords();
  int n = static_cast<int>(b.size());
  int j = n - 1;
  while (b[static_cast<size_t>(j)] == 0) --j;  // j >= 0: points are nonzero

  std::vector<RatVec> lower(static_cast<size_t>(n),
                            RatVec(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) lower[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (int k = 0; k <= j; ++k)
    lower[static_cast<size_t>(j)][static_cast<size_t>(k)] = b[static_cast<size_t>(k)];
  for (int k = j + 1; k < n; ++k)
    lower[static_cast<size_t>(j)][static_cast<size_t>(k)] = 0;

  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i;
  std::swap(sigma[0], sigma[static_cast<size_t>(j)]);

  return GroupElement::permutation(sigma) * GroupElement(std::move(lower));
}

PolytopeAnalysis destabilize_at_point(const HomogeneousPolynomial& f,
                                      const ProjectivePoint& p) {
  return nearest_point(state_degree_d(act(move_point_to_e(p), f)));
}

bool check_lower_triangular_invariance(const HomogeneousPolynomial& f,
                                       const GroupElement& g,
                                       const GroupElement& l) {
  if (!l.is_lower_triangular())
    throw std::invalid_argument("perturbation must be lower triangular");
  PolytopeAnalysis base = nearest_point(state_degree_d(act(g, f)));
  if (!base.lambda.has_value())
    throw HypothesisNotMet("no destabilizing direction in these coordinates");
  if (!base.lambda->weakly_increasing())
    throw HypothesisNotMet(
        "incumbent weights are not weakly increasing; conjugate by a "
        "permutation first");
  PolytopeAnalysis after = nearest_point(state_degree_d(act(l * g, f)));
  return base.delta_squared == after.delta_squared &&
         after.lambda.has_value() && *base.lambda == *after.lambda;
}

ClassificationResult classify(const HomogeneousPolynomial& f,
                              const SearchConfig& cfg) {
  if (cfg.budget < 0) throw std::invalid_argument("negative budget");
  if (cfg.entry_bound < 1) throw std::invalid_argument("entry bound must be >= 1");
  int n = f.r() + 1;

  Incumbent best;
  long frames = 0;
  auto consider = [&](const GroupElement& g) {
    PolytopeAnalysis analysis = nearest_point(state_degree_d(act(g, f)));
    ++frames;
    best.offer(analysis, g);
  };

  std::vector<std::vector<int>> perms = all_permutations(n);
  for (const auto& sigma : perms)
    consider(GroupElement::permutation(sigma));

  std::vector<ProjectivePoint> targets;
  for (int i = 0; i < n; ++i)
    targets.push_back(ProjectivePoint::coordinate_point(f.r(), i));
  for (const auto& p : cfg.candidate_points) {
    if (p.r() != f.r())
      throw std::invalid_argument("candidate point dimension mismatch");
    targets.push_back(p);
  }
  for (const auto& p : targets) {
    GroupElement mover = move_point_to_e(p);
    consider(mover);
    for (const auto& sigma : perms)
      consider(GroupElement::permutation(sigma) * mover);
  }

  // The structured incumbent is independent of budget and seed; perturbing
  // it (rather than the random-phase winner) keeps the returned distance
  // monotone when the budget grows with a fixed seed.
  std::optional<GroupElement> structured;
  if (best.label.has_value()) structured = best.label->witness_g;

  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < cfg.budget; ++k)
    consider(random_invertible(rng, n, cfg.entry_bound));

  if (structured.has_value()) {
    std::mt19937_64 perturb_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int k = 0; k < 16; ++k) {
      GroupElement l = random_unit_lower_triangular(perturb_rng, n,
                                                    cfg.entry_bound);
      consider(l * *structured);
    }
  }

  ClassificationResult result;
  result.frames_examined = frames;
  if (best.label.has_value()) {
    recheck_label(f, *best.label);
    result.label = best.label;
    result.verdict =
        "unstable: destabilizing one-parameter subgroup certified (stratum "
        "distance is a lower bound)";
  } else {
    result.verdict =
        "no destabilizing one-parameter subgroup found within budget; this "
        "is not a semistability certificate";
  }
  return result;
}

}  // namespace hesselink
