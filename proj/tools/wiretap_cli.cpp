// Command-line front end: classify wiretap channels, compute capacities and
// secrecy capacity, trace rate-equivocation boundaries, export curve data.
//
// Exit codes: 0 success, 1 input error, 2 finished with solver warnings,
// 3 internal assertion failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wiretap/binary.hpp"
#include "wiretap/classify.hpp"
#include "wiretap/io.hpp"
#include "wiretap/oracle.hpp"
#include "wiretap/region.hpp"

namespace {

using nlohmann::json;

double r12(double v) {
  return std::strtod(wiretap::format_sig(v).c_str(), nullptr);
}

struct ChannelArgs {
  std::string file;
  std::vector<double> bsc_bec;
  std::vector<double> bec_bsc;
  std::vector<double> xor_pair;
  std::vector<double> bsc_bsec;
  std::string dump;
};

void add_channel_options(CLI::App* cmd, ChannelArgs& args) {
  auto* group = cmd->add_option_group("channel", "channel source");
  group->add_option("--file", args.file, "channel JSON file");
  group
      ->add_option("--bsc-bec", args.bsc_bec,
                   "BSC(eps) main, BEC(alpha) eavesdropper: EPS ALPHA")
      ->expected(2);
  group
      ->add_option("--bec-bsc", args.bec_bsc,
                   "BEC(alpha) main, BSC(eps) eavesdropper: ALPHA EPS")
      ->expected(2);
  group
      ->add_option("--xor-pair", args.xor_pair,
                   "quaternary two-bit XOR-noise pair: P Q R")
      ->expected(3);
  group
      ->add_option("--bsc-bsec", args.bsc_bsec,
                   "BSC(eps) main, symmetric-erasure eavesdropper: P Q EPS")
      ->expected(3);
  group->require_option(1);
  cmd->add_option("--dump", args.dump,
                  "also write the resolved channel JSON to this path");
}

wiretap::WiretapChannel resolve_channel(const ChannelArgs& args) {
  wiretap::WiretapChannel w =
      !args.file.empty() ? wiretap::load_channel_json(args.file)
      : !args.bsc_bec.empty()
          ? wiretap::make_bsc_bec(args.bsc_bec[0], args.bsc_bec[1])
      : !args.bec_bsc.empty()
          ? wiretap::make_bec_bsc(args.bec_bsc[0], args.bec_bsc[1])
      : !args.xor_pair.empty()
          ? wiretap::make_xor_pair(args.xor_pair[0], args.xor_pair[1],
                                   args.xor_pair[2])
          : wiretap::make_bsc_bsec(args.bsc_bsec[0], args.bsc_bsec[1],
                                   args.bsc_bsec[2]);
  if (!args.dump.empty()) wiretap::save_channel_json(w, args.dump);
  return w;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << text;
}

std::vector<double> build_mu_grid(int count, double mu_max) {
  if (count < 1 || mu_max <= 0)
    throw std::invalid_argument("mu grid: need count >= 1 and mu-max > 0");
  std::vector<double> grid{0.0};
  const double lo = std::min(1e-3, mu_max);
  for (int i = 0; i + 1 < count; ++i)
    grid.push_back(
        lo * std::pow(mu_max / lo,
                      count > 2 ? static_cast<double>(i) / (count - 2) : 1.0));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete memoryless wiretap channel toolkit"};
  app.require_subcommand(1);

  ChannelArgs classify_ch, capacity_ch, secrecy_ch, region_ch, curve_ch,
      oracle_ch;
  std::string classify_out, capacity_out, secrecy_out;
  std::string region_out = ".";
  std::string curve_out = "curve.csv";
  int mu_count = 65;
  double mu_max = 32.0;
  std::uint64_t seed = wiretap::SolverOptions{}.seed;
  unsigned threads = 1;
  double curve_mu = 0.0;
  unsigned curve_resolution = 10000;
  double oracle_mu = 0.0;
  unsigned oracle_resolution = 400;
  std::size_t oracle_card_u = 0, oracle_card_v = 0;
  unsigned oracle_chain_resolution = 8;
  double oracle_tolerance = wiretap::kOptTol;

  CLI::App* c_classify = app.add_subcommand(
      "classify", "channel-ordering and symmetry classification");
  add_channel_options(c_classify, classify_ch);
  c_classify->add_option("-o,--out", classify_out, "write JSON here");

  CLI::App* c_capacity =
      app.add_subcommand("capacity", "capacities of both channels");
  add_channel_options(c_capacity, capacity_ch);
  c_capacity->add_option("-o,--out", capacity_out, "write JSON here");

  CLI::App* c_secrecy = app.add_subcommand("secrecy", "secrecy capacity");
  add_channel_options(c_secrecy, secrecy_ch);
  c_secrecy->add_option("-o,--out", secrecy_out, "write JSON here");
  c_secrecy->add_option("--seed", seed, "solver seed");
  c_secrecy->add_option("--threads", threads, "parallel solver restarts");

  CLI::App* c_region = app.add_subcommand(
      "region", "trace the rate-equivocation boundary to CSV + JSON");
  add_channel_options(c_region, region_ch);
  c_region->add_option("-o,--out", region_out, "output directory");
  c_region->add_option("--mu-count", mu_count,
                       "number of mu grid points (including 0)");
  c_region->add_option("--mu-max", mu_max, "largest mu in the grid");
  c_region->add_option("--seed", seed, "solver seed");
  c_region->add_option("--threads", threads, "parallel solver restarts");

  CLI::App* c_curve =
      app.add_subcommand("curve", "sample f and f_mu along the binary simplex");
  add_channel_options(c_curve, curve_ch);
  c_curve->add_option("-o,--out", curve_out, "output CSV path");
  c_curve->add_option("--mu", curve_mu, "slope parameter");
  c_curve->add_option("--grid-resolution", curve_resolution,
                      "number of sampling intervals");

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "brute-force reference solvers (test reproduction)");
  c_oracle->group("");  // hidden
  add_channel_options(c_oracle, oracle_ch);
  c_oracle->add_option("--mu", oracle_mu, "slope parameter");
  c_oracle->add_option("--grid-resolution", oracle_resolution,
                       "per-axis grid steps");
  c_oracle->add_option("--card-u", oracle_card_u,
                       "splitting cardinality (with --card-v: chain oracle)");
  c_oracle->add_option("--card-v", oracle_card_v, "prefix cardinality");
  c_oracle->add_option("--chain-resolution", oracle_chain_resolution,
                       "per-axis steps for the chain oracle");
  c_oracle->add_option("--tolerance", oracle_tolerance,
                       "agreement slack against the analytic search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_classify->parsed()) {
      const wiretap::WiretapChannel w = resolve_channel(classify_ch);
      emit(wiretap::classification_to_json(w, wiretap::classify(w)),
           classify_out);
      return 0;
    }
    if (c_capacity->parsed()) {
      const wiretap::WiretapChannel w = resolve_channel(capacity_ch);
      json j{{"name", w.name},
             {"cb", r12(w.cb())},
             {"cb_gap", r12(w.main_capacity.gap)},
             {"ce", r12(w.ce())},
             {"ce_gap", r12(w.eavesdropper_capacity.gap)}};
      json cbi = json::array(), cei = json::array();
      for (std::size_t i = 0; i < w.main_capacity.input.dim(); ++i)
        cbi.push_back(r12(w.main_capacity.input[i]));
      for (std::size_t i = 0; i < w.eavesdropper_capacity.input.dim(); ++i)
        cei.push_back(r12(w.eavesdropper_capacity.input[i]));
      j["cb_input"] = std::move(cbi);
      j["ce_input"] = std::move(cei);
      emit(j.dump(2) + "\n", capacity_out);
      return 0;
    }
    if (c_secrecy->parsed()) {
      const wiretap::WiretapChannel w = resolve_channel(secrecy_ch);
      wiretap::SolverOptions opts;
      opts.seed = seed;
      opts.threads = threads;
      emit(wiretap::secrecy_to_json(wiretap::secrecy_capacity(w, opts)),
           secrecy_out);
      return 0;
    }
    if (c_region->parsed()) {
      const wiretap::WiretapChannel w = resolve_channel(region_ch);
      wiretap::SolverOptions opts;
      opts.seed = seed;
      opts.threads = threads;
      const wiretap::RegionBoundary boundary =
          wiretap::trace_region(w, build_mu_grid(mu_count, mu_max), opts);
      std::filesystem::create_directories(region_out);
      const auto csv = std::filesystem::path(region_out) / "region.csv";
      const auto js = std::filesystem::path(region_out) / "region.json";
      wiretap::write_region_csv(boundary, csv.string());
      wiretap::write_region_json(boundary, js.string());
      std::cout << "wrote " << csv.string() << " and " << js.string() << " ("
                << boundary.points.size() << " points, C_s = "
                << wiretap::format_sig(boundary.secrecy_capacity) << ")\n";
      for (const std::string& warning : boundary.warnings)
        std::cerr << "warning: " << warning << "\n";
      return boundary.warnings.empty() ? 0 : 2;
    }
    if (c_curve->parsed()) {
      const wiretap::WiretapChannel w = resolve_channel(curve_ch);
      wiretap::write_curve_csv(
          wiretap::sample_curve(w, curve_mu, curve_resolution), curve_out);
      std::cout << "wrote " << curve_out << "\n";
      return 0;
    }
    // oracle
    const wiretap::WiretapChannel w = resolve_channel(oracle_ch);
    json j;
    if (oracle_card_u > 0 || oracle_card_v > 0) {
      if (oracle_card_u == 0 || oracle_card_v == 0)
        throw std::invalid_argument("oracle: need both --card-u and --card-v");
      const wiretap::BruteChainResult r = wiretap::brute_chain(
          w, oracle_mu, oracle_card_u, oracle_card_v, oracle_chain_resolution);
      j = json{{"value", r12(r.value)},
               {"lipschitz", r12(r.lipschitz)},
               {"error_bound", r12(r.error_bound)},
               {"evaluated", r.evaluated}};
    } else {
      const wiretap::BruteBinaryResult r =
          wiretap::brute_binary(w, oracle_mu, oracle_resolution);
      const wiretap::TangentConfig analytic =
          wiretap::best_config(w, oracle_mu);
      j = json{{"value", r12(r.value)},
               {"lambda", r12(r.config.lambda)},
               {"p1", r12(r.config.p1)},
               {"p2", r12(r.config.p2)},
               {"lipschitz", r12(r.lipschitz)},
               {"error_bound", r12(r.error_bound)},
               {"evaluated", r.evaluated},
               {"analytic_value", r12(analytic.objective)},
               {"agrees",
                std::abs(analytic.objective - r.value) <=
                    oracle_tolerance + r.error_bound}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
