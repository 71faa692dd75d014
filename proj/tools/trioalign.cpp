#include <string>
#include <vector>

#include "trioalign/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trioalign::cli_main(std::move(args));
}
