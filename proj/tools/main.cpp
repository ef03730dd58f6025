#include <cstdio>
#include <string>
#include <vector>

#include "hartogs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  hartogs::RunResult res = hartogs::run(args);
  std::fputs(res.text.c_str(), res.exit_code == 0 ? stdout : stderr);
  return res.exit_code;
}
