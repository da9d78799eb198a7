#include <iostream>
#include <string>
#include <vector>

#include "saturate/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    std::cerr << saturate::cli::usage();
    if (args.empty()) return saturate::cli::kInputError;
    return saturate::cli::kPass;
  }
  const auto run = saturate::cli::dispatch(args);
  std::cout << run.report.dump(2) << '\n';
  if (run.exit_code == saturate::cli::kInputError) {
    std::cerr << "saturate: " << run.report["witness"]["kind"].get<std::string>() << ": "
              << run.report["witness"].value("detail", "") << '\n';
  }
  return run.exit_code;
}
