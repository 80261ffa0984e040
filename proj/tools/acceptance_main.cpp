#include <iostream>
#include <string>

#include "lefkit/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const int failed = lefkit::run_acceptance(filter, std::cout);
  return failed == 0 ? 0 : 1;
}
