// Acceptance suite: runs every verification criterion and prints one
// status line per check.  Exit code 0 iff no criterion failed.
// Run with --extended to include the d=4 fourth-rank Cayley-Hamilton case.

#include <cstdio>
#include <cstring>

#include "hyperinv/verify.hpp"

int main(int argc, char** argv) {
  hyperinv::VerifyOptions options;
  options.seed = 42;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) options.extended = true;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      options.seed = static_cast<std::uint64_t>(std::strtoull(argv[++i], nullptr, 10));
  }
  const auto report = hyperinv::run_verification(options);
  std::fputs(hyperinv::format_report(report).c_str(), stdout);
  std::fprintf(stderr, "acceptance wall time: %.1fs (seed %llu%s)\n", report.elapsed_seconds,
               static_cast<unsigned long long>(options.seed),
               options.extended ? ", extended" : "");
  return report.all_passed() ? 0 : 1;
}
