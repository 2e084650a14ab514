#include "nodal/report.hpp"

#include <sstream>

namespace nodal {

namespace {

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

}  // namespace

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json::object();
  j["field"] = r.field;
  j["variables"] = r.variables;
  j["equations"] = r.equations;
  j["degrees"] = r.degrees;
  j["r"] = r.r;
  j["seeds"] = {{"seed", r.seed}};
  j["strategy"] = r.strategy;
  j["strategy_is_default"] = r.strategy_is_default;
  j["method"] = r.method;

  auto chain = nlohmann::json::array();
  for (const auto& p : r.chain) chain.push_back({{"prefix", p.prefix}, {"smooth", p.smooth}});
  j["assumptions"] = {{"chain_smoothness", chain}, {"chain_recombined", r.chain_recombined}};

  j["mu"] = r.mu;
  j["scheme_degree"] = r.scheme_degree;
  j["node_coordinates"] = r.node_coordinates;
  j["node_orbits"] = r.node_orbits;
  j["odp"] = {{"status", r.odp_status}, {"checked_orbits", r.odp_checked_orbits}};
  j["declared_nodes"] = {{"count", r.declared_nodes}, {"singular", r.declared_nodes_singular}};

  j["k_star"] = r.k_star;
  j["dim_S_kstar"] = r.dim_s_kstar;
  j["dim_I_kstar"] = r.dim_i;
  j["dim_IJ_kstar"] = r.dim_ij;
  put_optional(j, "dim_IJ_kstar_ideal", r.dim_ij_ideal);
  put_optional(j, "dim_IJ_kstar_points", r.dim_ij_points);
  j["defect"] = r.delta;
  j["combination"] = {{"attempts", r.combination_attempts},
                      {"certificate", r.certificate},
                      {"row_form_weights", r.row_form_weights}};

  j["sigma"] = r.sigma;
  put_optional(j, "smooth_h12", r.smooth_h12);
  put_optional(j, "h11", r.h11);
  put_optional(j, "h12", r.h12);
  j["notes"] = r.notes;

  auto timings = nlohmann::json::object();
  for (const auto& t : r.timings) timings[t.phase] = t.seconds;
  j["timings"] = timings;
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  r = AnalysisReport{};
  j.at("field").get_to(r.field);
  j.at("variables").get_to(r.variables);
  j.at("equations").get_to(r.equations);
  j.at("degrees").get_to(r.degrees);
  j.at("r").get_to(r.r);
  j.at("seeds").at("seed").get_to(r.seed);
  j.at("strategy").get_to(r.strategy);
  j.at("strategy_is_default").get_to(r.strategy_is_default);
  j.at("method").get_to(r.method);
  for (const auto& p : j.at("assumptions").at("chain_smoothness"))
    r.chain.push_back({p.at("prefix").get<int>(), p.at("smooth").get<bool>()});
  j.at("assumptions").at("chain_recombined").get_to(r.chain_recombined);
  j.at("mu").get_to(r.mu);
  j.at("scheme_degree").get_to(r.scheme_degree);
  j.at("node_coordinates").get_to(r.node_coordinates);
  j.at("node_orbits").get_to(r.node_orbits);
  j.at("odp").at("status").get_to(r.odp_status);
  j.at("odp").at("checked_orbits").get_to(r.odp_checked_orbits);
  j.at("declared_nodes").at("count").get_to(r.declared_nodes);
  j.at("declared_nodes").at("singular").get_to(r.declared_nodes_singular);
  j.at("k_star").get_to(r.k_star);
  j.at("dim_S_kstar").get_to(r.dim_s_kstar);
  j.at("dim_I_kstar").get_to(r.dim_i);
  j.at("dim_IJ_kstar").get_to(r.dim_ij);
  get_optional(j, "dim_IJ_kstar_ideal", r.dim_ij_ideal);
  get_optional(j, "dim_IJ_kstar_points", r.dim_ij_points);
  j.at("defect").get_to(r.delta);
  j.at("combination").at("attempts").get_to(r.combination_attempts);
  j.at("combination").at("certificate").get_to(r.certificate);
  j.at("combination").at("row_form_weights").get_to(r.row_form_weights);
  j.at("sigma").get_to(r.sigma);
  get_optional(j, "smooth_h12", r.smooth_h12);
  get_optional(j, "h11", r.h11);
  get_optional(j, "h12", r.h12);
  j.at("notes").get_to(r.notes);
  for (const auto& [phase, secs] : j.at("timings").items()) r.timings.push_back({phase, secs.get<double>()});
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "field: " << r.field << "\n";
  out << "degrees:";
  for (int d : r.degrees) out << ' ' << d;
  out << "\n";
  out << "chain smoothness:";
  for (const auto& p : r.chain) out << " V(F1..F" << p.prefix << ")=" << (p.smooth ? "smooth" : "singular");
  if (r.chain.empty()) out << " (hypersurface)";
  if (r.chain_recombined) out << " (passed after generic recombination)";
  out << "\n";
  out << "mu: " << r.mu << "\n";
  out << "odp: " << r.odp_status << "\n";
  out << "strategy: " << r.strategy << "\nmethod: " << r.method << "\n";
  out << "k_star: " << r.k_star << "\n";
  out << "dim I_k: " << r.dim_i << "\n";
  out << "dim (I cap J)_k: " << r.dim_ij << "\n";
  out << "defect: " << r.delta << "\n";
  if (r.smooth_h12) {
    out << "smooth h12: " << *r.smooth_h12 << "\n";
    out << "h11: " << *r.h11 << "\nh12: " << *r.h12 << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace nodal
