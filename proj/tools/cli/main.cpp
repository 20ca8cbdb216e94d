#include <fstream>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = gl2q::cli::run(args);
  if (!result.message.empty()) (result.exit_code == gl2q::cli::kUsage ? std::cerr : std::cout) << result.message << "\n";
  if (!result.report.is_null()) {
    const std::string text = result.report.dump(2);
    if (result.output.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(result.output);
      if (!out) {
        std::cerr << "cannot write " << result.output << "\n";
        return gl2q::cli::kUsage;
      }
      out << text << "\n";
    }
  }
  return result.exit_code;
}
