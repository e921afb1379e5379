#include <vector>
#include <string>

#include "pwa/cli.hpp"

int main(int argc, char** argv) {
  return pwa::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
