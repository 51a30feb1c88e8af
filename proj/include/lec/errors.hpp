#ifndef LEC_ERRORS_HPP
#define LEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lec {

/// A problem instance admits no feasible solution (e.g. some node degree is
/// below the requested cover level).
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The instance exceeds a configured enumeration or branch-and-bound cap.
/// Caps are hard errors, never silent truncation.
struct too_large_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text; line is 1-based.
struct parse_error : std::runtime_error {
  parse_error(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

}  // namespace lec

#endif  // LEC_ERRORS_HPP
