#include "boolform/complexity.hpp"
#include "boolform/enumerate.hpp"
#include "boolform/patterns.hpp"
#include "boolform/report.hpp"
#include "boolform/series.hpp"
#include "boolform/singular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace boolform;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitNumeric = 70;
constexpr int kExitResource = 75;

struct Common {
  std::string model = "catalan";
  int vars = 1;
  unsigned precision = kDefaultPrecisionBits;
  std::string out = "text";
};

void add_common(CLI::App* app, Common& c, bool with_model = true, bool with_vars = true) {
  if (with_model)
    app->add_option("--model", c.model, "catalan | assoc | comm | assoccomm")
        ->capture_default_str();
  if (with_vars)
    app->add_option("--vars,-n", c.vars, "number of variables")
        ->capture_default_str()
        ->check(CLI::Range(1, 10000000));
  app->add_option("--precision", c.precision, "binary precision of real arithmetic")
      ->capture_default_str()
      ->check(CLI::Range(64u, 65536u));
  app->add_option("--out", c.out, "json | csv | text")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

ojson header(const std::string& kind) {
  ojson j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

void error_out(const std::string& kind, const std::string& message) {
  ojson j;
  j["schema"] = kSchema;
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << j.dump() << '\n';
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad n grid entry: " + item);
    }
  }
  if (out.empty()) throw InputError("empty n grid");
  return out;
}

BoolFunc parse_function(const std::string& hex, int n) {
  if (hex.find(':') != std::string::npos) return BoolFunc::parse(hex);
  if (n > 6) throw InputError("--fn as a hex word needs --vars <= 6");
  std::uint64_t w = 0;
  try {
    std::size_t used = 0;
    w = std::stoull(hex, &used, 16);
    if (used != hex.size()) throw std::invalid_argument(hex);
  } catch (const std::exception&) {
    throw InputError("bad truth table: " + hex);
  }
  if (n < 6 && (w >> (std::uint64_t{1} << n)) != 0)
    throw InputError("truth table has bits beyond 2^n entries");
  return BoolFunc::from_word(n, w);
}

// ---------------------------------------------------------------------------

int run_count(const Common& c, int size, const std::string& method, std::uint64_t cap) {
  const Model model = parse_model(c.model);
  BigInt count;
  if (method == "dp")
    count = count_trees(model, size, c.vars);
  else if (method == "shapes")
    count = count_trees_by_shapes(model, size, c.vars);
  else
    count = count_trees_exhaustive(model, size, c.vars, cap);
  if (c.out == "json") {
    ojson j = header("count");
    j["model"] = model_name(model);
    j["n"] = c.vars;
    j["m"] = size;
    j["method"] = method;
    j["count"] = count.str();
    std::cout << j.dump(2) << '\n';
  } else if (c.out == "csv") {
    std::cout << "model,n,m,count\n"
              << model_name(model) << ',' << c.vars << ',' << size << ',' << count << '\n';
  } else {
    std::cout << count << '\n';
  }
  return 0;
}

int run_distribution(const Common& c, int size, const std::string& method, std::uint64_t cap) {
  const Model model = parse_model(c.model);
  DistributionMethod dm = DistributionMethod::Auto;
  if (method == "dp") dm = DistributionMethod::DynamicProgramming;
  if (method == "serial") dm = DistributionMethod::ExhaustiveSerial;
  if (method == "parallel") dm = DistributionMethod::ExhaustiveParallel;
  const Distribution d = distribution(model, size, c.vars, dm, cap);
  if (c.out == "json") {
    std::cout << d.to_json() << '\n';
  } else if (c.out == "csv") {
    std::cout << d.to_csv();
  } else {
    std::cout << "total " << d.total << '\n';
    for (const auto& [f, n] : d.counts) std::cout << f.serialize() << ' ' << n << '\n';
  }
  return 0;
}

int run_series(const Common& c, int order, const std::string& kind) {
  const Model model = parse_model(c.model);
  if (order < 0) throw InputError("order must be >= 0");
  PowerSeries s;
  if (kind == "total" || kind == "half") {
    const ModelSeries ms = solve_model_series(model, c.vars, order);
    s = kind == "total" ? ms.total : ms.half;
  } else {
    s = solve_aux_series(model, parse_aux(kind), c.vars, order);
  }
  if (c.out == "json") {
    ojson j = header("series");
    j["model"] = model_name(model);
    j["n"] = c.vars;
    j["series"] = kind;
    j["order"] = order;
    j["coefficients"] = s.to_strings();
    std::cout << j.dump(2) << '\n';
  } else if (c.out == "csv") {
    std::cout << "m,coefficient\n";
    for (int i = 0; i <= s.order(); ++i) std::cout << i << ',' << to_string(s[i]) << '\n';
  } else {
    for (int i = 0; i <= s.order(); ++i) std::cout << i << ' ' << to_string(s[i]) << '\n';
  }
  return 0;
}

int run_singularity(const Common& c, const std::string& method, int digits) {
  const Model model = parse_model(c.model);
  const SingularityReport r =
      method == "numeric" ? numeric_singularity(model, c.vars) : dominant_singularity(model, c.vars);
  if (c.out == "json") {
    ojson j = header("singularity");
    j["model"] = model_name(model);
    j["n"] = c.vars;
    j["rho"] = to_decimal(r.rho, digits);
    j["value_at_rho"] = to_decimal(r.value_at_rho, digits);
    j["method"] = r.method;
    j["iterations"] = r.iterations;
    std::cout << j.dump(2) << '\n';
  } else if (c.out == "csv") {
    std::cout << "model,n,rho,value_at_rho,method\n"
              << model_name(model) << ',' << c.vars << ',' << to_decimal(r.rho, digits) << ','
              << to_decimal(r.value_at_rho, digits) << ',' << r.method << '\n';
  } else {
    std::cout << "rho " << to_decimal(r.rho, digits) << '\n'
              << "value_at_rho " << to_decimal(r.value_at_rho, digits) << '\n'
              << "method " << r.method << '\n';
  }
  return 0;
}

int run_ratio(const Common& c, const std::string& numerator, const LadderOptions& opt) {
  const Model model = parse_model(c.model);
  const NumericModel nm(model, c.vars);
  RatioFunction fn;
  if (numerator == "ST_x")
    fn = [&](const Real& z) { return nm.st_x(z).deriv / nm.total(z).deriv; };
  else if (numerator == "g_x")
    fn = [&](const Real& z) { return nm.g_x(z).deriv / nm.total(z).deriv; };
  else
    throw InputError("ratio numerator must be ST_x or g_x");
  const RatioResult r = limiting_ratio(fn, nm.rho(), opt, numerator);
  if (c.out == "json") {
    ojson j = header("ratio");
    j["model"] = model_name(model);
    j["n"] = c.vars;
    j["numerator"] = numerator;
    j["value"] = to_decimal(r.value, 30);
    j["error"] = to_decimal(r.error, 6);
    j["column"] = r.column;
    auto& rungs = j["ladder"] = ojson::array();
    for (std::size_t k = 0; k < r.raw.size(); ++k)
      rungs.push_back({{"eps", to_decimal(r.eps[k], 10)},
                       {"raw", to_decimal(r.raw[k], 25)},
                       {"extrapolant", to_decimal(r.extrapolants[k], 25)}});
    std::cout << j.dump(2) << '\n';
  } else if (c.out == "csv") {
    std::cout << "k,eps,raw,extrapolant\n";
    for (std::size_t k = 0; k < r.raw.size(); ++k)
      std::cout << k << ',' << to_decimal(r.eps[k], 10) << ',' << to_decimal(r.raw[k], 25) << ','
                << to_decimal(r.extrapolants[k], 25) << '\n';
  } else {
    std::cout << numerator << " ratio " << to_decimal(r.value, 30) << "\nerror "
              << to_decimal(r.error, 6) << "\ncolumn " << r.column << '\n';
  }
  return 0;
}

int run_constants(const Common& c, const std::string& grid) {
  const auto rows = constants_table(parse_grid(grid));
  if (c.out == "json")
    std::cout << constants_table_json(rows) << '\n';
  else if (c.out == "csv")
    std::cout << constants_table_csv(rows);
  else
    std::cout << constants_table_text(rows);
  return 0;
}

int run_lemmas(const Common& c, int max_size, std::uint64_t cap) {
  const LemmaReport r = verify_pattern_lemmas(parse_model(c.model), max_size, c.vars, cap);
  if (c.out == "json") {
    std::cout << r.to_json() << '\n';
  } else if (c.out == "csv") {
    std::cout << "lemma,checked,counterexamples,status\n";
    for (const auto& row : r.rows)
      std::cout << '"' << row.name << "\"," << row.checked << ',' << row.counterexamples << ','
                << (row.counterexamples ? "FAIL" : "PASS") << '\n';
  } else {
    std::cout << r.to_text();
  }
  return r.ok() ? 0 : 1;
}

int run_complexity(const Common& c, const std::string& fn, const std::string& grid,
                   int max_size) {
  const Model model = parse_model(c.model);
  const BoolFunc f = parse_function(fn, c.vars);
  const MinimalTreeSet ts = complexity(f, model, max_size);
  ojson j = header("complexity");
  j["model"] = model_name(model);
  j["function"] = f.serialize();
  j["L"] = ts.L;
  j["M"] = ts.M();
  auto& trees = j["trees"] = ojson::array();
  for (const auto& t : ts.trees) trees.push_back(t.to_text());
  std::string text;
  if (ts.L > 0) {
    const ExpansionTally tally = enumerate_expansions(ts);
    const LambdaBounds b = lambda_bounds(model, ts.L, ts.M());
    const CountBounds cb = expansion_count_bounds(model, ts.L, ts.M());
    const ProbabilityReport pr = probability_vs_bounds(f, model, parse_grid(grid));
    j["lambda_T"] = tally.lambda_T;
    j["lambda_X"] = tally.lambda_X;
    j["count_bounds"] = {{"lambda_T", {cb.T_lower, cb.T_upper}},
                         {"lambda_X", {cb.X_lower, cb.X_upper}}};
    j["bounds"] = {{"lower", b.lower},
                   {"upper", b.upper},
                   {"stated_for_L_above_1", b.stated_for_L_above_1}};
    auto& pts = j["estimate"]["points"] = ojson::array();
    for (const auto& p : pr.points)
      pts.push_back({{"n", p.n}, {"value", to_decimal(p.estimate, 15)}});
    j["estimate"]["extrapolated"] = to_decimal(pr.extrapolated, 15);
    j["estimate"]["within_bounds"] = pr.within_bounds;
  }
  if (c.out == "json") {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (c.out == "csv") {
    std::cout << "model,function,L,M,lambda_T,lambda_X,lower,upper,estimate\n"
              << model_name(model) << ',' << f.serialize() << ',' << ts.L << ',' << ts.M();
    if (ts.L > 0)
      std::cout << ',' << j["lambda_T"] << ',' << j["lambda_X"] << ','
                << j["bounds"]["lower"] << ',' << j["bounds"]["upper"] << ','
                << j["estimate"]["extrapolated"].get<std::string>();
    else
      std::cout << ",,,,,";
    std::cout << '\n';
    return 0;
  }
  std::cout << "L " << ts.L << "\nM " << ts.M() << '\n';
  for (const auto& t : ts.trees) std::cout << "  " << t.to_text() << '\n';
  if (ts.L > 0) {
    std::cout << "lambda_T " << j["lambda_T"] << "\nlambda_X " << j["lambda_X"] << '\n'
              << "bounds " << j["bounds"]["lower"] << ' ' << j["bounds"]["upper"] << '\n'
              << "estimate " << j["estimate"]["extrapolated"].get<std::string>() << '\n';
  }
  return 0;
}

int run_report(const Common& c, const LadderOptions& opt) {
  const Model model = parse_model(c.model);
  const std::string js = model_report_json(model, c.vars, opt);
  if (c.out == "text" || c.out == "csv") {
    const auto j = ojson::parse(js);
    if (c.out == "csv") {
      std::cout << "model,n,rho,value_at_rho,true_const,literal_const\n"
                << j["model"].get<std::string>() << ',' << c.vars << ','
                << j["rho"].get<std::string>() << ',' << j["value_at_rho"].get<std::string>()
                << ',' << j["ratios"]["true_const"].get<std::string>() << ','
                << j["ratios"]["literal_const"].get<std::string>() << '\n';
    } else {
      std::cout << "rho " << j["rho"].get<std::string>() << "\nvalue_at_rho "
                << j["value_at_rho"].get<std::string>() << "\ntrue_const "
                << j["ratios"]["true_const"].get<std::string>() << "\nliteral_const "
                << j["ratios"]["literal_const"].get<std::string>() << '\n';
    }
  } else {
    std::cout << js << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random And/Or tree formulas: counts, series, constants"};
  app.require_subcommand(1);

  Common common;
  int size = 1, order = kDefaultSeriesOrder, max_size = 5, digits = 30;
  std::uint64_t cap = kDefaultGenerationCap;
  std::string method, kind = "total", numerator = "ST_x", grid = "100,200,400", fn;
  std::string cgrid = "200";
  int cmax = kDefaultComplexityMaxSize;
  LadderOptions ladder;

  auto* count = app.add_subcommand("count", "number of trees of a given size");
  add_common(count, common);
  count->add_option("--size,-m", size, "tree size (leaves)")->required()->check(CLI::Range(1, 60));
  method = "dp";
  count->add_option("--method", method, "dp | shapes | exhaustive")
      ->check(CLI::IsMember({"dp", "shapes", "exhaustive"}));
  count->add_option("--cap", cap, "exhaustive generation cap");

  std::string dmethod = "auto";
  auto* dist = app.add_subcommand("distribution", "probability distribution on functions");
  add_common(dist, common);
  dist->add_option("--size,-m", size, "tree size")->required()->check(CLI::Range(1, 60));
  dist->add_option("--method", dmethod, "auto | dp | serial | parallel")
      ->check(CLI::IsMember({"auto", "dp", "serial", "parallel"}));
  dist->add_option("--cap", cap, "exhaustive generation cap");

  auto* series = app.add_subcommand("series", "coefficients of a generating function");
  add_common(series, common);
  series->add_option("--order", order, "truncation order")->check(CLI::Range(0, 4096));
  series->add_option("--kind", kind,
                     "total | half | g_x | gbar_x | ST_x | STbar_x | h_x | simple_x_T | "
                     "simple_x_X | ST_all");

  std::string smethod = "closed";
  auto* sing = app.add_subcommand("singularity", "dominant singularity of the model series");
  add_common(sing, common);
  sing->add_option("--method", smethod, "closed | numeric")
      ->check(CLI::IsMember({"closed", "numeric"}));
  sing->add_option("--digits", digits, "decimal digits printed")->check(CLI::Range(5, 2000));

  auto* ratio = app.add_subcommand("ratio", "limiting ratio S'/T' at the singularity");
  add_common(ratio, common);
  ratio->add_option("--numerator", numerator, "ST_x | g_x");
  ratio->add_option("--eps0", ladder.eps0, "first ladder offset");
  ratio->add_option("--rungs", ladder.rungs, "ladder rungs")->check(CLI::Range(3, 200));

  auto* table = app.add_subcommand("constants-table", "fitted constants next to published values");
  add_common(table, common, false, false);
  table->add_option("--n-grid", grid, "comma-separated n values");

  auto* lemmas = app.add_subcommand("verify-lemmas", "exhaustive check of the pattern lemmas");
  add_common(lemmas, common);
  lemmas->add_option("--max-size,-m", max_size, "largest tree size")->check(CLI::Range(1, 12));
  std::uint64_t lemma_cap = 200'000'000;
  lemmas->add_option("--cap", lemma_cap, "trees per size");

  auto* comp = app.add_subcommand("complexity", "minimal trees, expansions and bounds");
  add_common(comp, common);
  comp->add_option("--fn", fn, "truth table as hex word (x1 is the top index bit) or n:<n>:<hex>")
      ->required();
  comp->add_option("--n-grid", cgrid, "n values for the expansion estimate");
  comp->add_option("--max-size", cmax, "largest size searched")->check(CLI::Range(1, 12));

  auto* report = app.add_subcommand("report", "singularity and constants for one (model, n)");
  add_common(report, common);
  report->add_option("--eps0", ladder.eps0, "first ladder offset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_out("usage", e.what());
    return kExitUsage;
  }

  try {
    PrecisionScope scope(common.precision);
    if (*count) return run_count(common, size, method, cap);
    if (*dist) return run_distribution(common, size, dmethod, cap);
    if (*series) return run_series(common, order, kind);
    if (*sing) return run_singularity(common, smethod, digits);
    if (*ratio) return run_ratio(common, numerator, ladder);
    if (*table) return run_constants(common, grid);
    if (*lemmas) return run_lemmas(common, max_size, lemma_cap);
    if (*comp) return run_complexity(common, fn, cgrid, cmax);
    if (*report) return run_report(common, ladder);
  } catch (const ResourceError& e) {
    error_out("resource", e.what());
    return kExitResource;
  } catch (const NumericError& e) {
    error_out("numeric", e.what());
    return kExitNumeric;
  } catch (const InputError& e) {
    error_out("input", e.what());
    return kExitUsage;
  } catch (const StructureError& e) {
    error_out("structure", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    error_out("domain", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
