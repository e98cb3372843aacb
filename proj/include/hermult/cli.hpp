#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hermult/io.hpp"
#include "hermult/multiindex.hpp"
#include "hermult/polyoracle.hpp"

namespace hermult {

/// Inputs of one expansion problem, read from a JSON file of the form
/// {"k":[...], "Lambda":[[...]], "Sigma":[[...]], "Upsilon":[[...]], "rational":false}.
///
/// Matrices are held exactly; entries may be numbers or "p/q" strings.
/// Lambda is m x n, Sigma n x n, Upsilon m x m, and k has arity n.
struct ProblemSpec {
  MultiIndex k{0};
  RationalMatrix lambda{1, 1};
  RationalMatrix sigma{1, 1};
  RationalMatrix upsilon{1, 1};
  bool rational = false;

  [[nodiscard]] std::size_t n() const { return sigma.rows(); }
  [[nodiscard]] std::size_t m() const { return upsilon.rows(); }
};

/// Validates shapes, and SPD (float) or symmetry (rational) of the covariances.
ProblemSpec parse_problem_spec(const Json& j);
ProblemSpec load_problem_spec(const std::string& path);

/// Runs the command line, excluding the program name. Returns 0 on success,
/// 1 when a verification or comparison fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermult
