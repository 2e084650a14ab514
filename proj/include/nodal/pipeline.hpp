#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "nodal/defect.hpp"
#include "nodal/hodge.hpp"

namespace nodal {

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::optional<Strategy> strategy;
  std::optional<Method> method;
  bool skip_odp = false;
};

struct PhaseTiming {
  std::string phase;
  double seconds = 0;
  friend bool operator==(const PhaseTiming&, const PhaseTiming&) = default;
};

/// Everything an analysis produces, with field elements already rendered.
struct AnalysisReport {
  std::string field;
  std::vector<std::string> variables;
  std::vector<std::string> equations;
  std::vector<int> degrees;
  int r = 0;
  std::uint64_t seed = 0;
  std::string strategy;
  bool strategy_is_default = true;
  std::string method;

  std::vector<PrefixReport> chain;
  bool chain_recombined = false;

  std::size_t mu = 0;
  std::size_t scheme_degree = 0;
  bool node_coordinates = false;
  std::size_t node_orbits = 0;
  std::string odp_status;
  std::size_t odp_checked_orbits = 0;
  std::size_t declared_nodes = 0;
  std::size_t declared_nodes_singular = 0;

  int k_star = 0;
  std::size_t dim_s_kstar = 0;
  std::size_t dim_i = 0;
  std::size_t dim_ij = 0;
  std::optional<std::size_t> dim_ij_ideal;
  std::optional<std::size_t> dim_ij_points;
  std::size_t delta = 0;
  int combination_attempts = 0;
  std::string certificate;
  bool row_form_weights = false;

  std::vector<std::string> sigma;
  /// Present for Calabi-Yau degree tuples (sum of degrees r + 4) only.
  std::optional<long> smooth_h12;
  std::optional<long> h11;
  std::optional<long> h12;

  std::vector<PhaseTiming> timings;
  std::vector<std::string> notes;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

namespace pipeline_detail {

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<PhaseTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({phase, std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<PhaseTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pipeline_detail

/// Hypothesis checks, nodes, defect and Hodge numbers for one system.
/// Declared nodes, if any, are checked to be singular points.
template <class F>
AnalysisReport analyze(const CompleteIntersection<F>& input, const PipelineOptions& opts,
                       const std::vector<std::vector<typename F::Element>>& declared = {}) {
  AnalysisReport rep;
  Rng rng(opts.seed);
  pipeline_detail::PhaseClock clock(rep.timings);
  rep.field = input.field().describe();
  rep.variables = input.ring()->names();
  for (const auto& f : input.equations()) rep.equations.push_back(to_string(f));
  rep.degrees = input.degrees();
  rep.r = input.r();
  rep.seed = opts.seed;
  const Strategy strategy = opts.strategy.value_or(kDefaultStrategy);
  rep.strategy = strategy_name(strategy);
  rep.strategy_is_default = !opts.strategy.has_value() || *opts.strategy == kDefaultStrategy;

  auto chain = establish_smooth_chain(input, rng);
  rep.chain = chain.literal;
  rep.chain_recombined = chain.recombined;
  if (chain.recombined) rep.notes.push_back("equations replaced by a generic recombination generating the same ideal");
  const auto& ci = chain.system;
  clock.lap("chain_smoothness");

  std::optional<NodeSet<F>> nodes;
  try {
    nodes = compute_nodes(ci, rng);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptySingularLocus) throw;
  }
  clock.lap("nodes");

  if (nodes) {
    rep.mu = nodes->mu;
    rep.scheme_degree = nodes->scheme_degree;
    rep.node_coordinates = nodes->has_points;
    rep.node_orbits = nodes->orbits.size();
    if (opts.skip_odp) {
      rep.odp_status = "skipped";
    } else if (!nodes->has_points) {
      rep.odp_status = "reduced singular scheme";
    } else {
      const auto odp = verify_odp(ci, *nodes);
      rep.odp_checked_orbits = odp.per_orbit.size();
      if (!odp.all_ok()) {
        throw Error(ErrorKind::HypothesisViolation, "a singular point is not an ordinary double point");
      }
      rep.odp_status = "verified";
    }
    for (const auto& p : declared) {
      ++rep.declared_nodes;
      bool singular = true;
      for (const auto& g : nodes->j_sigma.generators())
        if (!ci.field().is_zero(evaluate(g, p))) singular = false;
      if (singular) ++rep.declared_nodes_singular;
    }
  } else {
    rep.odp_status = "smooth";
    rep.declared_nodes = declared.size();
  }
  clock.lap("odp");

  Method method = opts.method.value_or(nodes && nodes->has_points ? Method::Both : Method::Ideal);
  rep.method = method_name(method);
  rep.k_star = ci.k_star();
  if (rep.k_star >= 0) rep.dim_s_kstar = monomial_basis(ci.n_vars(), rep.k_star).size();
  if (nodes) {
    const auto d = compute_defect(ci, *nodes, strategy, method, rng);
    rep.dim_i = d.dim_i;
    rep.dim_ij = d.dim_ij;
    rep.dim_ij_ideal = d.dim_ij_ideal;
    rep.dim_ij_points = d.dim_ij_points;
    rep.delta = d.delta;
    rep.combination_attempts = d.ideal.attempts;
    rep.certificate = d.ideal.certificate;
    rep.row_form_weights = !d.ideal.row_weights.empty();
    if (rep.row_form_weights) rep.notes.push_back("rows of unequal degree weighted by random forms");
  } else if (rep.k_star >= 0) {
    const auto ideal = defect_detail::combine(wedge_minor_matrix(ci), strategy, ci.ring(), rng);
    rep.dim_i = graded_piece_dimension(ideal.generators, rep.k_star, ci.ring());
    rep.dim_ij = rep.dim_i;
  }
  clock.lap("defect");

  for (const auto& s : elementary_symmetric(rep.degrees)) rep.sigma.push_back(s.get_str());
  if (is_calabi_yau_tuple(rep.degrees)) {
    const auto hodge = hodge_report(rep.degrees, static_cast<long>(rep.mu), static_cast<long>(rep.delta));
    rep.smooth_h12 = hodge.smooth_h12;
    rep.h11 = hodge.h11_resolution;
    rep.h12 = hodge.h12_resolution;
  } else {
    rep.notes.push_back("degrees do not sum to r + 4; Hodge numbers not computed");
  }
  clock.lap("hodge");
  return rep;
}

}  // namespace nodal
