#include <iostream>
#include <string>
#include <vector>

#include "peakalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out, err;
  const int code = peakalg::run_cli(args, out, err);
  if (!out.empty()) std::cout << out;
  if (!err.empty()) std::cerr << err;
  return code;
}
