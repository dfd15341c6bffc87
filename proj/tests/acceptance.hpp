#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acceptance {

struct Outcome {
  std::string name;
  std::string expected;
  std::string observed;
  std::string tolerance;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
};

// Runs every criterion, printing one line per criterion to `out` as it goes.
std::vector<Outcome> run_all(std::ostream& out);

std::string format_line(const Outcome& o);

}  // namespace acceptance
