#pragma once

#include "boolform/singular.hpp"

#include <string>
#include <vector>

namespace boolform {

inline constexpr const char* kSchema = "boolform/v1";

// {schema, model, n, rho, value_at_rho, ratios: {true_const, literal_const},
// diagnostics} for one (model, n).
std::string model_report_json(Model model, int n, const LadderOptions& opt = {});

struct ConstantsRow {
  Model model;
  ConstantTarget target;
  ConstantEstimate estimate;
  double published;
};

// All four models, both targets, in kAllModels order.
std::vector<ConstantsRow> constants_table(const std::vector<int>& n_grid,
                                          const LadderOptions& opt = {});
std::string constants_table_json(const std::vector<ConstantsRow>& rows);
std::string constants_table_text(const std::vector<ConstantsRow>& rows);
std::string constants_table_csv(const std::vector<ConstantsRow>& rows);

}  // namespace boolform
