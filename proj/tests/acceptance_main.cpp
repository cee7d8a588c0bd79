// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exit code 0 only
// when everything passes.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "arborlab/verify.hpp"

int main(int argc, char** argv) {
  arborlab::VerifyOptions opts;
  std::vector<std::string> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0)
      opts.quick = true;
    else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
      opts.jobs = static_cast<unsigned>(std::atoi(argv[++i]));
    else if (std::strcmp(argv[i], "--workdir") == 0 && i + 1 < argc)
      opts.workdir = argv[++i];
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      selected.push_back(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--quick] [--jobs N] [--workdir DIR] [--only CHECK]...\n",
                   argv[0]);
      return 2;
    }
  }
  if (selected.empty()) selected.push_back("all");

  auto names = arborlab::all_check_names();
  auto index_of = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i + 1;
    return std::size_t{0};
  };

  auto results = arborlab::run_checks(selected, opts);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%s criterion %zu (%s) [%.1fs]: %s\n", r.pass ? "PASS" : "FAIL", index_of(r.name),
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
