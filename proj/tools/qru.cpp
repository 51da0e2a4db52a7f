#include <cstdio>
#include <string>
#include <vector>

#include <qru/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qru::cli::CommandResult r = qru::cli::run(args);
  if (!r.out.empty()) std::fputs(r.out.c_str(), stdout);
  if (!r.err.empty()) std::fprintf(stderr, "%s\n", r.err.c_str());
  return r.code;
}
