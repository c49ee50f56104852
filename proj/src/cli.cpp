#include "gcum/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcum/cumulants.hpp"
#include "gcum/evalnum.hpp"
#include "gcum/format.hpp"
#include "gcum/query.hpp"

namespace gcum {

namespace {

McConfig parse_mc_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size()) {
    throw CLI::ValidationError("--mc", "expected <samples>:<seed>");
  }
  McConfig cfg;
  try {
    std::size_t consumed = 0;
    cfg.samples = std::stoull(spec.substr(0, colon), &consumed);
    if (consumed != colon) throw std::invalid_argument("trailing characters");
    cfg.seed = std::stoull(spec.substr(colon + 1), &consumed);
    if (consumed != spec.size() - colon - 1) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--mc", "expected <samples>:<seed>");
  }
  if (cfg.samples == 0) throw CLI::ValidationError("--mc", "samples must be >= 1");
  return cfg;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Exact moments and joint cumulants of products of centered Gaussian "
      "variables.\n\nQueries: \"mv i j ...\" for a moment of the product "
      "X_i X_j ..., \"k\" with bare indices (singlets) and parenthesized "
      "groups (products) for a joint cumulant, e.g. \"k 1 2 (3,4)\"."};
  app.set_version_flag("--version", "gauss-cumulants 1.0.0");

  std::string query_text;
  bool standardize = false;
  std::string output_style = "text";
  bool print_count = false;
  std::string eval_path;
  std::string mc_spec;
  std::size_t max_order = 16;
  bool unpruned = false;
  unsigned threads = 1;

  app.add_option("query", query_text, "Query string, e.g. \"k (1,2) (3,4)\"")
      ->required();
  app.add_flag("--std", standardize,
               "Standardize: substitute V[i,i] -> 1 and print C symbols");
  app.add_option("--output", output_style, "Output style")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  app.add_flag("--count", print_count, "Also print the term count");
  auto* eval_opt =
      app.add_option("--eval", eval_path, "Covariance JSON file to evaluate against");
  app.add_option("--mc", mc_spec,
                 "Monte Carlo cross-check as <samples>:<seed> (requires --eval)")
      ->needs(eval_opt);
  app.add_option("--max-order", max_order, "Resource guard on the total index count")
      ->capture_default_str();
  app.add_flag("--unpruned", unpruned,
               "Reference mode: keep partitions with odd blocks (identical result)");
  app.add_option("--threads", threads, "Worker threads for the partition loop")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  ParsedQuery parsed;
  try {
    parsed = parse_query(query_text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const CumulantQuery engine_query{parsed.groups};
  CumulantOptions opts;
  opts.max_total_order = max_order;
  opts.prune_odd_blocks = !unpruned;
  opts.threads = threads;

  Poly result;
  try {
    if (parsed.kind == QueryKind::Moment) {
      const std::size_t order = engine_query.total_order();
      if (order > opts.max_total_order) {
        throw ResourceLimitError("query order " + std::to_string(order) +
                                 " exceeds the configured ceiling of " +
                                 std::to_string(opts.max_total_order));
      }
      result = moment(parsed.groups.front());
    } else {
      result = cumulant(engine_query, opts);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }

  if (standardize) result = substitute_diagonal_one(result);

  std::optional<CovMatrix> cov;
  double eval_value = 0.0;
  std::optional<McEstimate> mc;
  std::optional<McConfig> mc_cfg;
  try {
    if (!eval_path.empty()) {
      cov = CovMatrix::load_json_file(eval_path);
      eval_value = eval_numeric(result, *cov);
      if (!mc_spec.empty()) {
        mc_cfg = parse_mc_spec(mc_spec);
        // A moment query is the one-group cumulant, so the same estimator
        // covers both kinds.
        mc = mc_estimate_cumulant(engine_query, *cov, *mc_cfg);
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }

  if (output_style == "json") {
    nlohmann::json j = poly_to_json(result);
    j["kind"] = parsed.kind == QueryKind::Moment ? "moment" : "cumulant";
    j["standardized"] = standardize;
    if (print_count) j["term_count"] = result.term_count();
    if (cov) j["eval"] = eval_value;
    if (mc) {
      j["mc"] = {{"estimate", mc->estimate},
                 {"std_error", mc->std_error},
                 {"samples", mc_cfg->samples},
                 {"seed", mc_cfg->seed}};
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  const OutputStyle style =
      output_style == "latex" ? OutputStyle::Latex : OutputStyle::Text;
  out << format_poly(result, style, standardize) << '\n';
  if (print_count) out << "terms: " << result.term_count() << '\n';
  if (cov) out << "eval: " << format_double(eval_value) << '\n';
  if (mc) {
    out << "mc: estimate=" << format_double(mc->estimate)
        << " std_error=" << format_double(mc->std_error)
        << " samples=" << mc_cfg->samples << " seed=" << mc_cfg->seed << '\n';
  }
  return 0;
}

}  // namespace gcum
