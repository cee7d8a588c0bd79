#include <algorithm>
#include <iostream>

#include "cli_common.hpp"

#include "arborlab/errors.hpp"

using namespace arborlab;

namespace {

// `replay --manifest FILE [--out DIR] [--jobs N]`: substitute the recorded
// invocation (minus its --out/--jobs) and parse as usual
std::vector<std::string> resolve_replay(const std::vector<std::string>& args) {
  std::string manifest_path, out_override, jobs_override;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--manifest" && i + 1 < args.size())
      manifest_path = args[++i];
    else if (args[i] == "--out" && i + 1 < args.size())
      out_override = args[++i];
    else if (args[i] == "--jobs" && i + 1 < args.size())
      jobs_override = args[++i];
    else
      throw InvalidArgumentError("replay takes --manifest FILE [--out DIR] [--jobs N]");
  }
  if (manifest_path.empty()) throw InvalidArgumentError("replay needs --manifest FILE");
  RunManifest m = RunManifest::from_json(nlohmann::json::parse(read_text_file(manifest_path)));
  if (m.invocation.empty())
    throw InvalidArgumentError("manifest carries no invocation to replay: " + manifest_path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m.invocation.size(); ++i) {
    if ((m.invocation[i] == "--out" || m.invocation[i] == "--jobs") &&
        i + 1 < m.invocation.size()) {
      ++i;
      continue;
    }
    out.push_back(m.invocation[i]);
  }
  if (!out_override.empty()) {
    out.push_back("--out");
    out.push_back(out_override);
  }
  if (!jobs_override.empty()) {
    out.push_back("--jobs");
    out.push_back(jobs_override);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"arborlab: wreath-product obstructions, cycle statistics, and prime scans for "
               "iterated polynomial maps"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  cli::Context ctx;
  app.add_option("--out", ctx.out_dir, "output directory for reports")->capture_default_str();
  app.add_option("--seed", ctx.seed, "seed for randomized commands");
  app.add_option("--jobs", ctx.jobs, "worker threads for shardable scans")
      ->capture_default_str();
  app.add_flag("--quick", ctx.quick, "reduced ranges and sample counts");

  cli::register_stats(app, ctx);
  cli::register_scan(app, ctx);
  cli::register_group_ops(app, ctx);

  // help-only entry; the real work happens before parsing
  app.add_subcommand("replay", "re-execute a recorded manifest: --manifest FILE [--out DIR]");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args[0] == "replay") args = resolve_replay(args);
    ctx.invocation = args;
    std::reverse(args.begin(), args.end()); // CLI11 vector parse order
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cli::CheckFailure&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
