#pragma once

// Subcommands of the pingpong tool. Each returns the process exit status:
// 0 success, 1 a validation or invariant failure, 2 bad input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace pingpong::cli {

struct Options {
  std::string target;  // spec path, or builtin model name for axioms
  std::string points;  // points file for classify / tile
  std::optional<std::size_t> depth;
  std::size_t resolution = 32;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t max_steps = 60;
  std::optional<std::size_t> samples;
  std::string out;         // empty: stdout
  std::string points_out;  // limit-set: extended-precision limit points
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err);
int cmd_limit_set(const Options& o, std::ostream& out, std::ostream& err);
int cmd_classify(const Options& o, std::ostream& out, std::ostream& err);
int cmd_tile(const Options& o, std::ostream& out, std::ostream& err);
int cmd_export_scene(const Options& o, std::ostream& out, std::ostream& err);
int cmd_axioms(const Options& o, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pingpong::cli
