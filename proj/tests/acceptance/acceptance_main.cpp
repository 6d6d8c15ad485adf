// Acceptance suite: one criterion per --criterion value, one pass/fail line
// per criterion. Exit code is the number of failed criteria.

#include <iostream>
#include <string>

int run_criterion(int crit);

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) only = std::stoi(argv[++i]);
  }
  int failures = 0;
  for (int crit = 1; crit <= 10; ++crit) {
    if (only && crit != only) continue;
    failures += run_criterion(crit);
  }
  return failures;
}
