#include "u2/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  u2::CliResult r = u2::run_cli(args);
  std::fputs(r.out.c_str(), r.code == 2 ? stderr : stdout);
  return r.code;
}
