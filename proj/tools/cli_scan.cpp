#include "cli_common.hpp"

#include <fstream>

#include "arborlab/dynamics.hpp"
#include "arborlab/errors.hpp"

namespace arborlab::cli {

namespace {

// runs an experiment in resumable range chunks; the checkpoint file is keyed
// by the manifest payload hash
ScanReport run_chunked(const ExperimentConfig& cfg, const Context& ctx,
                       const RunManifest& manifest) {
  constexpr std::uint64_t kChunk = 200'000;
  if (cfg.to - cfg.from < kChunk) return run_experiment(cfg, ctx.jobs);

  auto checkpoint_path =
      ctx.ensure_out() / ("checkpoint-" + manifest.payload_hash() + ".json");
  std::optional<ScanReport> done;
  std::uint64_t resume_from = cfg.from;
  if (std::filesystem::exists(checkpoint_path)) {
    auto j = nlohmann::json::parse(read_text_file(checkpoint_path.string()));
    done = ScanReport::from_json(j.at("report"));
    resume_from = j.at("next").get<std::uint64_t>();
    std::cout << "resuming from checkpoint at p = " << resume_from << "\n";
  }
  for (std::uint64_t lo = resume_from; lo <= cfg.to;) {
    std::uint64_t hi = std::min(cfg.to, lo + kChunk - 1);
    ExperimentConfig part = cfg;
    part.from = lo;
    part.to = hi;
    ScanReport rep = run_experiment(part, ctx.jobs);
    done = done ? merge_reports(*done, rep) : rep;
    lo = hi + 1;
    nlohmann::json ck{{"next", lo}, {"report", done->to_json()}};
    write_text_file(checkpoint_path.string(), ck.dump() + "\n");
  }
  std::filesystem::remove(checkpoint_path);
  // normalize the echoed range to the full request
  done->parameters = cfg.to_json();
  done->from = cfg.from;
  done->to = cfg.to;
  return *done;
}

void finish_scan(const Context& ctx, const ExperimentConfig& cfg, const RunManifest& manifest) {
  ScanReport rep = run_chunked(cfg, ctx, manifest);
  Density d = density(rep);
  std::cout << rep.mode << " scan over [" << cfg.from << ", " << cfg.to << "]: " << d.matching
            << "/" << d.counted << " = " << rational_str(d.value) << " (skipped "
            << rep.skipped() << ")\n";
  ctx.emit("scan-" + rep.mode, manifest, rep.to_json(), rep.to_csv());
}

nlohmann::json scan_caps() {
  return {{"checkpoint_chunk", 200000},
          {"frobenius_degree_cap", 64},
          {"orbit_bit_cap", 1000000}};
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw ParseError("prime range must look like 2..100000");
  return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
}

struct ScanArgs {
  std::string f;
  std::string a;
  std::string a0 = "0";
  std::string primes = "2..10000";
  std::uint32_t c_bound = 1;
  std::uint32_t n_max = 4;
  std::uint32_t frob_n = 1;
};

ExperimentConfig to_config(const ScanArgs& args, const std::string& mode) {
  auto [from, to] = parse_range(args.primes);
  ExperimentConfig cfg(DynamicalSystem(DynamicalSystem::parse_coeffs(args.f),
                                       parse_rational(args.a), parse_rational(args.a0)));
  cfg.mode = mode;
  cfg.c_bound = args.c_bound;
  cfg.n_max = args.n_max;
  cfg.frob_n = args.frob_n;
  cfg.from = from;
  cfg.to = to;
  return cfg;
}

} // namespace

void register_scan(CLI::App& app, Context& ctx) {
  auto* scan = app.add_subcommand("scan", "prime scans over a dynamical system");
  scan->require_subcommand(1);

  auto add_common = [](CLI::App* cmd, std::shared_ptr<ScanArgs> args, bool need_a0) {
    cmd->add_option("--f", args->f, "integer coefficients c0,c1,...,cd of f")->required();
    cmd->add_option("--a", args->a, "target value (rational)")->required();
    auto* a0 = cmd->add_option("--a0", args->a0, "orbit seed (rational)");
    if (need_a0) a0->required();
    cmd->add_option("--primes", args->primes, "prime range from..to")->capture_default_str();
  };

  {
    auto args = std::make_shared<ScanArgs>();
    auto* cmd = scan->add_subcommand("hits", "least n with f^n(a0) = a mod p, per prime");
    add_common(cmd, args, true);
    cmd->callback([&ctx, args] {
      ExperimentConfig cfg = to_config(*args, "hits");
      RunManifest m = RunManifest::make("scan hits", cfg.to_json(), ctx.seed, scan_caps());
      finish_scan(ctx, cfg, m);
    });
  }

  {
    auto args = std::make_shared<ScanArgs>();
    auto* cmd =
        scan->add_subcommand("stability", "factor counts of f^n(x) - a mod p for n <= n_max");
    add_common(cmd, args, false);
    cmd->add_option("--C", args->c_bound, "factor-count bound")->capture_default_str();
    cmd->add_option("--nmax", args->n_max, "iterate horizon")->capture_default_str();
    cmd->callback([&ctx, args] {
      ExperimentConfig cfg = to_config(*args, "stability");
      RunManifest m = RunManifest::make("scan stability", cfg.to_json(), ctx.seed, scan_caps());
      finish_scan(ctx, cfg, m);
    });
  }

  {
    auto args = std::make_shared<ScanArgs>();
    auto* cmd = scan->add_subcommand(
        "frobenius", "factor-degree multisets of f^n(x) - a mod p, per prime");
    add_common(cmd, args, false);
    cmd->add_option("--n", args->frob_n, "iterate")->capture_default_str();
    cmd->callback([&ctx, args] {
      ExperimentConfig cfg = to_config(*args, "frobenius");
      RunManifest m = RunManifest::make("scan frobenius", cfg.to_json(), ctx.seed, scan_caps());
      finish_scan(ctx, cfg, m);
    });
  }

  {
    auto path = std::make_shared<std::string>();
    auto* cmd = scan->add_subcommand("run", "run an experiment definition file");
    cmd->add_option("config", *path, "experiment JSON: {f, a, a0, mode, ...}")->required();
    cmd->callback([&ctx, path] {
      nlohmann::json j = nlohmann::json::parse(read_text_file(*path));
      ExperimentConfig cfg = ExperimentConfig::from_json(j);
      RunManifest m = RunManifest::make("scan run", cfg.to_json(), cfg.seed ? cfg.seed : ctx.seed, scan_caps());
      finish_scan(ctx, cfg, m);
    });
  }

}

} // namespace arborlab::cli
