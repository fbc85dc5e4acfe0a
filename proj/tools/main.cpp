// Command-line frontend: construct, validate, convert, and approximate the
// four digraph decompositions; exact small-instance oracles; generators; and
// an approx-vs-oracle comparison table.
//
// Exit codes: 0 ok, 1 validation failure, 2 usage/input error, 3 instance
// exceeds an exact-computation cap.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dwl/approx_dpw.hpp"
#include "dwl/approx_dtw.hpp"
#include "dwl/families.hpp"
#include "dwl/io.hpp"
#include "dwl/oracles.hpp"
#include "dwl/separator.hpp"

namespace {

using nlohmann::ordered_json;

dwl::ValidationReport validate_one(const dwl::Digraph& g,
                                   const dwl::DirectedPathDecomposition& d) {
  return dwl::validate_dpd(g, d);
}
dwl::ValidationReport validate_one(const dwl::Digraph& g, const dwl::DagDecomposition& d) {
  return dwl::validate_dag_decomposition(g, d);
}
dwl::ValidationReport validate_one(const dwl::Digraph& g, const dwl::KellyDecomposition& d) {
  return dwl::validate_kelly(g, d);
}
dwl::ValidationReport validate_one(const dwl::Digraph& g, const dwl::ArborealDecomposition& d) {
  return dwl::validate_arboreal(g, d);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dwl::InvalidInputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dwl::InvalidInputError("cannot write " + path);
  out << content;
}

dwl::Digraph load_graph(const std::string& path) { return dwl::parse_digraph(read_file(path)); }

dwl::OracleCaps env_caps() {
  const char* text = std::getenv("DWL_EXACT_CAPS");
  return dwl::parse_oracle_caps(text ? text : "");
}

ordered_json telemetry_json(const dwl::RunTelemetry& t) {
  return ordered_json{{"recursion_depth", t.recursion_depth},
                      {"max_separator_size", t.max_separator_size},
                      {"separator_count", t.separator_count},
                      {"max_guard_size", t.max_guard_size},
                      {"max_node_budget", t.max_node_budget},
                      {"beta", t.beta.to_string()}};
}

ordered_json report_json(const dwl::ValidationReport& report) {
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json entry{{"condition", v.condition}, {"pass", v.pass}};
    if (v.witness) entry["witness"] = v.witness->to_string();
    verdicts.push_back(std::move(entry));
  }
  return ordered_json{{"pass", report.ok()}, {"verdicts", std::move(verdicts)}};
}

dwl::ValidationReport validate_any(const dwl::Digraph& g, const dwl::AnyDecomposition& dec) {
  return std::visit([&](const auto& d) { return validate_one(g, d); }, dec);
}

int width_any(const dwl::AnyDecomposition& dec) {
  return std::visit([](const auto& d) { return dwl::width(d); }, dec);
}

struct ComputeArgs {
  std::string param, algo = "approx", strategy = "exact";
  std::string alpha = "7/8";
  int threshold = -1;
  unsigned long long seed = 0;
  std::string input, output;
};

dwl::SeparatorStrategy make_strategy(const std::string& mode, const dwl::Rational& alpha,
                                     unsigned long long seed) {
  dwl::SeparatorStrategy s;
  s.alpha = alpha;
  s.rng_seed = seed;
  if (mode == "exact")
    s.mode = dwl::SeparatorMode::Exact;
  else if (mode == "heuristic")
    s.mode = dwl::SeparatorMode::Heuristic;
  else if (mode == "trivial")
    s.mode = dwl::SeparatorMode::Trivial;
  else
    throw CLI::ValidationError("--strategy", "must be exact, heuristic, or trivial");
  return s;
}

int run_compute(const ComputeArgs& args) {
  dwl::Digraph g = load_graph(args.input);
  dwl::OracleCaps caps = env_caps();
  ordered_json out{{"param", args.param}, {"algo", args.algo}};

  if (args.algo == "approx") {
    dwl::Rational alpha = dwl::parse_rational(args.alpha);
    dwl::DpwRunConfig cfg = dwl::DpwRunConfig::defaults_for(g);
    cfg.strategy = make_strategy(args.strategy, alpha, args.seed);
    cfg.alpha_prime = alpha;
    if (args.threshold > 0) cfg.termination_threshold = args.threshold;

    std::optional<dwl::AnyDecomposition> dec;
    dwl::RunTelemetry telemetry;
    if (args.param == "dpw") {
      auto r = dwl::make_dpdec(g, g.vertices(), cfg);
      telemetry = r.telemetry;
      dec = std::move(r.decomposition);
    } else if (args.param == "dagw") {
      auto r = dwl::make_dpdec(g, g.vertices(), cfg);
      telemetry = r.telemetry;
      dec = r.decomposition.as_dag();
    } else if (args.param == "kw") {
      auto r = dwl::make_dpdec(g, g.vertices(), cfg);
      telemetry = r.telemetry;
      dec = dwl::dpd_to_kelly_path(dwl::normalize_dpd(r.decomposition));
    } else if (args.param == "dtw") {
      auto r = dwl::make_arbdec(g, g.vertices(), {}, cfg.strategy);
      telemetry = r.telemetry;
      dec = std::move(r.decomposition);
    } else {
      throw CLI::ValidationError("--param", "must be dpw, dagw, kw, or dtw");
    }
    int w = width_any(*dec);
    out["width"] = w;
    if (args.param == "dpw" || args.param == "kw") out["width_subtract_one"] = w - 1;
    out["telemetry"] = telemetry_json(telemetry);
    if (!args.output.empty()) write_file(args.output, dwl::decomposition_to_string(*dec));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (args.algo != "oracle") throw CLI::ValidationError("--algo", "must be approx or oracle");

  std::optional<dwl::AnyDecomposition> certificate;
  int w;
  if (args.param == "dpw") {
    auto r = dwl::dpw_by_ordering(g, caps.orderings);
    w = r.width;
    certificate = std::move(r.certificate);
  } else if (args.param == "dagw") {
    w = dwl::dagwidth_by_game(g, caps.games);
  } else if (args.param == "kw") {
    w = dwl::kellywidth_by_elimination(g, caps.elimination).width;
  } else if (args.param == "dtw") {
    auto r = dwl::dtw_exact_small(g, caps.dtw);
    w = r.width;
    certificate = std::move(r.certificate);
  } else {
    throw CLI::ValidationError("--param", "must be dpw, dagw, kw, or dtw");
  }
  out["width"] = w;
  if (args.param == "dpw" || args.param == "kw") out["width_subtract_one"] = w - 1;
  if (!args.output.empty()) {
    if (!certificate)
      throw CLI::ValidationError("-o", "no decomposition certificate for this oracle");
    write_file(args.output, dwl::decomposition_to_string(*certificate));
    out["certificate"] = args.output;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph width decompositions: approximation, validation, exact oracles"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "run an approximation or oracle, report width");
  compute->add_option("--param", compute_args.param, "dpw|dagw|kw|dtw")->required();
  compute->add_option("--algo", compute_args.algo, "approx|oracle");
  compute->add_option("--strategy", compute_args.strategy, "exact|heuristic|trivial");
  compute->add_option("--alpha", compute_args.alpha, "balance fraction, e.g. 7/8");
  compute->add_option("--threshold", compute_args.threshold, "termination threshold");
  compute->add_option("--seed", compute_args.seed, "rng seed");
  compute->add_option("-i,--input", compute_args.input, "graph file")->required();
  compute->add_option("-o,--output", compute_args.output, "decomposition JSON output");

  std::string val_kind, val_graph, val_dec;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a decomposition against a graph");
  validate_cmd->add_option("--kind", val_kind, "dpd|dag|kelly|arboreal")->required();
  validate_cmd->add_option("-g,--graph", val_graph, "graph file")->required();
  validate_cmd->add_option("-d,--decomposition", val_dec, "decomposition JSON")->required();

  std::string oracle_param, oracle_input, oracle_output;
  CLI::App* oracle = app.add_subcommand("oracle", "exact width on small instances");
  oracle->add_option("--param", oracle_param, "dpw|dagw|kw|dtw")->required();
  oracle->add_option("-i,--input", oracle_input, "graph file")->required();
  oracle->add_option("-o,--output", oracle_output, "certificate output (dpw/dtw)");

  std::string sep_alpha = "3/4", sep_subset, sep_input, sep_strategy = "exact";
  unsigned long long sep_seed = 0;
  CLI::App* sep = app.add_subcommand("sep", "balanced directed vertex separator");
  sep->add_option("--alpha", sep_alpha, "balance fraction");
  sep->add_option("--subset", sep_subset, "file listing the balance set U")->required();
  sep->add_option("-i,--input", sep_input, "graph file")->required();
  sep->add_option("--strategy", sep_strategy, "exact|heuristic");
  sep->add_option("--seed", sep_seed, "rng seed (heuristic)");

  std::string conv_from, conv_to, conv_dec, conv_out;
  CLI::App* convert = app.add_subcommand("convert", "dpd <-> kelly path conversion");
  convert->add_option("--from", conv_from, "dpd|kelly")->required();
  convert->add_option("--to", conv_to, "kelly|dpd")->required();
  convert->add_option("-d,--decomposition", conv_dec, "decomposition JSON")->required();
  convert->add_option("-o,--output", conv_out, "output file (default stdout)");

  std::string gen_family_name, gen_out, gen_input;
  std::vector<std::string> gen_params;
  unsigned long long gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a named graph family");
  std::string family_help = "one of:";
  for (const auto& name : dwl::family_names()) family_help += " " + name;
  family_help += ", or 'biorient' with -i";
  gen->add_option("--family", gen_family_name, family_help)->required();
  gen->add_option("--params", gen_params, "family parameters");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("-i,--input", gen_input, "input graph (family biorient)");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  std::string cmp_input;
  unsigned long long cmp_seed = 0;
  int cmp_threshold = -1;
  std::string cmp_strategy = "exact";
  CLI::App* compare = app.add_subcommand("compare", "approx vs oracle ratio table");
  compare->add_option("-i,--input", cmp_input, "graph file")->required();
  compare->add_option("--seed", cmp_seed, "rng seed");
  compare->add_option("--threshold", cmp_threshold, "termination threshold");
  compare->add_option("--strategy", cmp_strategy, "exact|heuristic|trivial");

  try {
    app.parse(argc, argv);

    if (compute->parsed()) return run_compute(compute_args);

    if (validate_cmd->parsed()) {
      dwl::Digraph g = load_graph(val_graph);
      dwl::AnyDecomposition dec = dwl::decomposition_from_string(read_file(val_dec));
      if (dwl::decomposition_kind_name(dwl::kind_of(dec)) != val_kind)
        throw dwl::InvalidInputError("decomposition kind is " +
                                     dwl::decomposition_kind_name(dwl::kind_of(dec)) +
                                     ", expected " + val_kind);
      dwl::ValidationReport report = validate_any(g, dec);
      ordered_json out = report_json(report);
      out["width"] = width_any(dec);
      std::cout << out.dump(2) << "\n";
      return report.ok() ? 0 : 1;
    }

    if (oracle->parsed()) {
      ComputeArgs args;
      args.param = oracle_param;
      args.algo = "oracle";
      args.input = oracle_input;
      args.output = oracle_output;
      return run_compute(args);
    }

    if (sep->parsed()) {
      dwl::Digraph g = load_graph(sep_input);
      dwl::Rational alpha = dwl::parse_rational(sep_alpha);
      std::istringstream in(read_file(sep_subset));
      dwl::VertexSet u;
      std::string token;
      while (in >> token) {
        if (token[0] == '#') {
          std::string rest;
          std::getline(in, rest);
          continue;
        }
        u.push_back(std::stoi(token));
      }
      u = dwl::make_set(std::move(u));
      dwl::SeparatorResult r = sep_strategy == "heuristic"
                                   ? dwl::find_sep_heuristic(g, u, alpha, sep_seed)
                                   : dwl::find_sep_exact(g, u, alpha);
      ordered_json out{{"S", r.s}, {"U1", r.u1}, {"U2", r.u2},
                       {"valid", dwl::validate_separator(g, u, alpha, r)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (convert->parsed()) {
      dwl::AnyDecomposition dec = dwl::decomposition_from_string(read_file(conv_dec));
      std::string actual = dwl::decomposition_kind_name(dwl::kind_of(dec));
      if (actual != conv_from)
        throw dwl::InvalidInputError("decomposition kind is " + actual + ", expected " + conv_from);
      dwl::AnyDecomposition result;
      if (conv_from == "dpd" && conv_to == "kelly") {
        auto dpd = dwl::normalize_dpd(std::get<dwl::DirectedPathDecomposition>(dec));
        result = dwl::dpd_to_kelly_path(dpd);
      } else if (conv_from == "kelly" && conv_to == "dpd") {
        result = dwl::kelly_path_to_dpd(std::get<dwl::KellyDecomposition>(dec));
      } else {
        throw dwl::InvalidInputError("supported conversions: dpd->kelly, kelly->dpd");
      }
      std::string text = dwl::decomposition_to_string(result);
      if (conv_out.empty())
        std::cout << text;
      else
        write_file(conv_out, text);
      return 0;
    }

    if (gen->parsed()) {
      dwl::Digraph g;
      if (gen_family_name == "biorient") {
        if (gen_input.empty())
          throw dwl::InvalidInputError("family biorient needs -i input graph");
        g = dwl::biorient(load_graph(gen_input));
      } else {
        std::vector<double> params;
        for (const auto& p : gen_params) params.push_back(std::stod(p));
        g = dwl::gen_family(gen_family_name, params, gen_seed);
      }
      std::string text = dwl::serialize_digraph(g);
      if (gen_out.empty())
        std::cout << text;
      else
        write_file(gen_out, text);
      return 0;
    }

    if (compare->parsed()) {
      dwl::Digraph g = load_graph(cmp_input);
      dwl::OracleCaps caps = env_caps();
      dwl::DpwRunConfig cfg = dwl::DpwRunConfig::defaults_for(g);
      cfg.strategy = make_strategy(cmp_strategy, dwl::Rational(7, 8), cmp_seed);
      if (cmp_threshold > 0) cfg.termination_threshold = cmp_threshold;
      if (cfg.strategy.mode == dwl::SeparatorMode::Exact &&
          g.vertex_count() > cfg.strategy.size_cap)
        cfg.strategy.mode = dwl::SeparatorMode::Heuristic;

      struct Row {
        std::string param;
        int approx = -1;
        int oracle = -1;
      };
      std::vector<Row> rows;
      {
        auto dpd = dwl::make_dpdec(g, g.vertices(), cfg).decomposition;
        int a = dwl::width(dpd);
        rows.push_back({"dpw", a, -1});
        rows.push_back({"dagw", a, -1});
        rows.push_back({"kw", dwl::width(dwl::dpd_to_kelly_path(dwl::normalize_dpd(dpd))), -1});
        rows.push_back(
            {"dtw", dwl::width(dwl::make_arbdec(g, g.vertices(), {}, cfg.strategy).decomposition),
             -1});
      }
      auto try_oracle = [&](const std::string& param) -> int {
        try {
          if (param == "dpw") return dwl::dpw_by_ordering(g, caps.orderings).width;
          if (param == "dagw") return dwl::dagwidth_by_game(g, caps.games);
          if (param == "kw") return dwl::kellywidth_by_elimination(g, caps.elimination).width;
          return dwl::dtw_exact_small(g, caps.dtw).width;
        } catch (const dwl::CapabilityError&) {
          return -1;
        }
      };
      for (auto& row : rows) row.oracle = try_oracle(row.param);

      std::cout << std::left << std::setw(6) << "param" << std::setw(8) << "approx"
                << std::setw(8) << "oracle" << "ratio\n";
      for (const auto& row : rows) {
        std::cout << std::left << std::setw(6) << row.param << std::setw(8) << row.approx;
        if (row.oracle < 0) {
          std::cout << std::setw(8) << "n/a" << "n/a\n";
        } else {
          std::ostringstream ratio;
          if (row.oracle == 0)
            ratio << (row.approx == 0 ? "1.00" : "inf");
          else
            ratio << std::fixed << std::setprecision(2)
                  << static_cast<double>(row.approx) / row.oracle;
          std::cout << std::setw(8) << row.oracle << ratio.str() << "\n";
        }
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const dwl::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
