#include <string>
#include <vector>

#include "plap/cli.hpp"

int main(int argc, char** argv) {
  return plap::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
