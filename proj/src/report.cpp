#include "boolform/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace boolform {

namespace {

unsigned precision_bits() {
  return static_cast<unsigned>(Real::default_precision() / 0.30102999566398120 + 0.5);
}

nlohmann::ordered_json ladder_json(const RatioResult& r) {
  nlohmann::ordered_json j;
  j["value"] = to_decimal(r.value, 25);
  j["error"] = to_decimal(r.error, 6);
  j["column"] = r.column;
  j["rungs"] = r.raw.size();
  j["converged"] = r.converged;
  return j;
}

}  // namespace

std::string model_report_json(Model model, int n, const LadderOptions& opt) {
  const Weights w = expansion_weights(model, n, opt);
  const SingularityReport s = dominant_singularity(model, n);
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["model"] = model_name(model);
  j["n"] = n;
  j["rho"] = to_decimal(s.rho, 30);
  j["value_at_rho"] = to_decimal(s.value_at_rho, 30);
  j["ratios"] = {
      {"true_const", to_decimal(constant_at(model, ConstantTarget::True, w), 20)},
      {"literal_const", to_decimal(constant_at(model, ConstantTarget::Literal, w), 20)}};
  nlohmann::ordered_json d;
  d["precision_bits"] = precision_bits();
  d["singularity_method"] = s.method;
  d["singularity_iterations"] = s.iterations;
  d["eps0"] = opt.eps0;
  d["ST_x_ratio"] = ladder_json(w.st);
  d["g_x_ratio"] = ladder_json(w.g);
  j["diagnostics"] = d;
  return j.dump(2);
}

std::vector<ConstantsRow> constants_table(const std::vector<int>& n_grid,
                                          const LadderOptions& opt) {
  std::vector<ConstantsRow> rows;
  for (Model m : kAllModels)
    for (ConstantTarget t : {ConstantTarget::True, ConstantTarget::Literal})
      rows.push_back({m, t, constant_estimate(m, t, n_grid, opt), published_constant(m, t)});
  return rows;
}

std::string constants_table_json(const std::vector<ConstantsRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["kind"] = "constants-table";
  if (!rows.empty()) j["n_grid"] = rows.front().estimate.n_grid;
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["model"] = model_name(r.model);
    o["target"] = target_name(r.target);
    o["computed"] = to_decimal(r.estimate.lambda, 12);
    o["fit_error"] = to_decimal(r.estimate.error, 3);
    o["slope"] = to_decimal(r.estimate.slope, 8);
    o["published"] = r.published;
    o["difference"] = (r.estimate.lambda - r.published).convert_to<double>();
    auto& vals = o["values"] = nlohmann::ordered_json::array();
    for (const auto& v : r.estimate.values) vals.push_back(to_decimal(v, 15));
    arr.push_back(o);
  }
  return j.dump(2);
}

std::string constants_table_text(const std::vector<ConstantsRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %-8s %14s %14s %12s\n", "model", "target", "computed",
                "published", "difference");
  os << buf;
  for (const auto& r : rows) {
    const double c = r.estimate.lambda.convert_to<double>();
    std::snprintf(buf, sizeof buf, "%-10s %-8s %14.8f %14.8f %12.2e\n",
                  model_name(r.model).c_str(), target_name(r.target).c_str(), c, r.published,
                  c - r.published);
    os << buf;
  }
  return os.str();
}

std::string constants_table_csv(const std::vector<ConstantsRow>& rows) {
  std::ostringstream os;
  os << "model,target,computed,published,difference\n";
  for (const auto& r : rows) {
    const double c = r.estimate.lambda.convert_to<double>();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.6g", c, r.published, c - r.published);
    os << model_name(r.model) << ',' << target_name(r.target) << ',' << buf << '\n';
  }
  return os.str();
}

}  // namespace boolform
