#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "valkit/bigint.hpp"

namespace valkit::cli {

/// Runs one command line (without the program name). Writes the report to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 on a domain error
/// (reported as a structured error object), 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TreeMeet {
  std::size_t first = 0;
  std::size_t second = 0;
  /// v(a - b), capped at the rendered depth.
  std::int64_t level = 0;
};

struct Tree {
  std::string diagram;
  std::vector<TreeMeet> meets;
};

/// Branches of Z_p down to `depth`, one per element, with each pairwise meet
/// marked at level v(a - b). Elements are rationals without p in the
/// denominator. Throws TooWide beyond p <= 5, depth <= 6, 8 elements.
Tree render_tree(Prime p, int depth, const std::vector<Rational>& elements,
                 const std::vector<std::string>& labels = {});

}  // namespace valkit::cli
