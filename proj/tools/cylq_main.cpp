#include <string>
#include <vector>

#include "cylq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cylq::cli::run(args);
}
