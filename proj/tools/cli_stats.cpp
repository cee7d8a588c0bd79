#include "cli_common.hpp"

#include "arborlab/cycle_stats.hpp"
#include "arborlab/errors.hpp"
#include "arborlab/numbers.hpp"
#include "arborlab/wreath.hpp"

namespace arborlab::cli {

namespace {

std::string distribution_csv(const Distribution& d, const std::string& stat) {
  std::string s = stat + ",num,den\n";
  for (const auto& [k, q] : d.p)
    s += std::to_string(k) + "," + q.get_num().get_str() + "," + q.get_den().get_str() + "\n";
  return s;
}

std::string table_csv(const CosetFpfTable& t) {
  std::string s = "coset,num,den\n";
  for (const auto& row : t.rows)
    s += row.label + "," + row.fpf.get_num().get_str() + "," + row.fpf.get_den().get_str() + "\n";
  s += "alpha," + t.alpha.get_num().get_str() + "," + t.alpha.get_den().get_str() + "\n";
  return s;
}

} // namespace

void register_stats(CLI::App& app, Context& ctx) {
  auto* stats = app.add_subcommand("stats", "coset tables, distributions, and bounds");
  stats->require_subcommand(1);

  // ---- stats coset-fpf
  {
    auto opt = std::make_shared<std::pair<std::string, std::string>>("", "auto");
    auto cap = std::make_shared<std::uint64_t>(10'000'000);
    auto* cmd = stats->add_subcommand("coset-fpf",
                                      "fixed-point-free proportions per coset of the socle");
    cmd->add_option("--group", opt->first, "group spec: catalog:NAME, A<d>, or S<d>")
        ->required();
    cmd->add_option("--socle", opt->second, "socle spec or 'auto'")->capture_default_str();
    cmd->add_option("--cap", *cap, "element cap for the exhaustive traversal")
        ->capture_default_str();
    cmd->callback([&ctx, opt, cap] {
      Catalog cat = ctx.catalog();
      PermGroup g = cat.resolve_group(opt->first);
      PermGroup n = opt->second == "auto" ? cat.resolve_socle(opt->first)
                                          : cat.resolve_group(opt->second);
      CosetFpfTable table = coset_fpf_table(g, n, {*cap, opt->first, opt->second});
      RunManifest m = RunManifest::make(
          "stats coset-fpf",
          {{"group", opt->first}, {"socle", opt->second}, {"cap", *cap}}, ctx.seed);
      std::cout << "alpha = " << rational_str(table.alpha) << "\n";
      ctx.emit("stats-coset-fpf", m, table.to_json(), table_csv(table));
    });
  }

  // ---- stats olds
  {
    auto n = std::make_shared<unsigned>(5);
    auto* cmd = stats->add_subcommand("olds", "closed-form coset derangement proportions");
    cmd->add_option("--n", *n, "symmetric group degree")->required();
    cmd->callback([&ctx, n] {
      OldsValues v = olds_coset_formula(*n);
      nlohmann::json j{
          {"n", *n},
          {"alternating_coset",
           {v.alternating_coset.get_num().get_str(), v.alternating_coset.get_den().get_str()}},
          {"odd_coset", {v.odd_coset.get_num().get_str(), v.odd_coset.get_den().get_str()}}};
      std::cout << "A" << *n << " coset: " << rational_str(v.alternating_coset)
                << "   odd coset: " << rational_str(v.odd_coset) << "\n";
      RunManifest m = RunManifest::make("stats olds", {{"n", *n}});
      std::string csv = "coset,num,den\nalternating," +
                        v.alternating_coset.get_num().get_str() + "," +
                        v.alternating_coset.get_den().get_str() + "\nodd," +
                        v.odd_coset.get_num().get_str() + "," + v.odd_coset.get_den().get_str() +
                        "\n";
      ctx.emit("stats-olds", m, j, csv);
    });
  }

  // ---- stats fixed-points
  {
    auto tower = std::make_shared<std::string>();
    auto* cmd = stats->add_subcommand("fixed-points",
                                      "exact fixed-point distribution of a full tower");
    cmd->add_option("--tower", *tower, "tower spec, e.g. S2^2 or A5*A5")->required();
    cmd->callback([&ctx, tower] {
      WreathTower t = resolve_tower(ctx, *tower);
      Distribution d = fixed_point_distribution(t);
      std::cout << "P(fixed = k) over " << t.to_string() << ":\n";
      for (const auto& [k, q] : d.p)
        std::cout << "  " << k << " -> " << rational_str(q) << "\n";
      RunManifest m = RunManifest::make("stats fixed-points", {{"tower", *tower}});
      ctx.emit("stats-fixed-points", m, d.to_json(), distribution_csv(d, "fixed_points"));
    });
  }

  // ---- stats cycle-counts
  {
    auto tower = std::make_shared<std::string>();
    auto samples = std::make_shared<std::uint64_t>(0);
    auto* cmd = stats->add_subcommand(
        "cycle-counts", "cycle-count distribution (exact, or Monte Carlo with --samples)");
    cmd->add_option("--tower", *tower, "tower spec")->required();
    cmd->add_option("--samples", *samples, "sample count; 0 selects exact mode");
    cmd->callback([&ctx, tower, samples] {
      WreathTower t = resolve_tower(ctx, *tower);
      std::uint64_t seed = ctx.seed_or(1);
      CycleCountResult r = *samples == 0
                               ? cycle_count_distribution(t, StatMode::Exact)
                               : cycle_count_distribution(t, StatMode::MonteCarlo, *samples, seed);
      nlohmann::json j = r.dist.to_json();
      j["exact"] = r.exact;
      if (!r.exact) {
        j["samples"] = r.samples;
        j["seed"] = r.seed;
      }
      RunManifest m = RunManifest::make(
          "stats cycle-counts", {{"tower", *tower}, {"samples", *samples}},
          *samples ? std::optional<std::uint64_t>(seed) : std::nullopt);
      ctx.emit("stats-cycle-counts", m, j, distribution_csv(r.dist, "cycles"));
    });
  }

  // ---- stats full-cycle
  {
    auto tower = std::make_shared<std::string>();
    auto samples = std::make_shared<std::uint64_t>(200'000);
    auto* cmd = stats->add_subcommand("full-cycle", "proportion of full-cycle elements");
    cmd->add_option("--tower", *tower, "tower spec")->required();
    cmd->add_option("--samples", *samples, "Monte Carlo samples when exact mode is out of range")
        ->capture_default_str();
    cmd->callback([&ctx, tower, samples] {
      WreathTower t = resolve_tower(ctx, *tower);
      std::uint64_t seed = ctx.seed_or(1);
      FullCycleResult r = full_cycle_proportion(t, *samples, seed);
      nlohmann::json j{{"tower", *tower}, {"exact", r.exact}};
      if (r.exact) {
        j["value"] = {r.value.get_num().get_str(), r.value.get_den().get_str()};
        std::cout << "full-cycle proportion = " << rational_str(r.value) << "\n";
      } else {
        j["estimate"] = r.estimate;
        j["samples"] = r.samples;
        j["seed"] = r.seed;
        std::cout << "full-cycle proportion ~ " << r.estimate << " (" << r.samples
                  << " samples)\n";
      }
      RunManifest m =
          RunManifest::make("stats full-cycle", {{"tower", *tower}, {"samples", *samples}}, seed);
      ctx.emit("stats-full-cycle", m, j);
    });
  }

  // ---- stats few-cycles-bound
  {
    auto n = std::make_shared<unsigned>(0);
    auto g = std::make_shared<unsigned>(0);
    auto gamma = std::make_shared<std::string>("1/2");
    auto* cmd = stats->add_subcommand("few-cycles-bound",
                                      "binomial tail sum against its closed-form bound");
    cmd->add_option("--N", *n, "number of large levels")->required();
    cmd->add_option("--g", *g, "cycle-count bound g(N)")->required();
    cmd->add_option("--gamma", *gamma, "rational gamma in (0,1)")->capture_default_str();
    cmd->callback([&ctx, n, g, gamma] {
      FewCyclesBound b = few_cycles_bound(*n, *g, parse_rational(*gamma));
      nlohmann::json j{{"N", *n},
                       {"gN", *g},
                       {"gamma", *gamma},
                       {"sum", {b.sum.get_num().get_str(), b.sum.get_den().get_str()}},
                       {"bound", {b.bound.get_num().get_str(), b.bound.get_den().get_str()}},
                       {"degenerate", b.degenerate},
                       {"sum_le_bound", b.sum <= b.bound}};
      std::cout << "sum = " << rational_str(b.sum) << "  bound = " << rational_str(b.bound)
                << (b.degenerate ? "  (degenerate)" : "") << "\n";
      RunManifest m = RunManifest::make("stats few-cycles-bound",
                                        {{"N", *n}, {"g", *g}, {"gamma", *gamma}});
      ctx.emit("stats-few-cycles-bound", m, j);
    });
  }
}

} // namespace arborlab::cli
