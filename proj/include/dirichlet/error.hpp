#ifndef DIRICHLET_ERROR_HPP
#define DIRICHLET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dirichlet {

/// Thrown when an operation's precondition is violated (bad parameters,
/// malformed input, out-of-range index). Carries a human-readable reason.
class Rejection : public std::invalid_argument {
public:
  explicit Rejection(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Rejection(what);
}

}  // namespace detail
}  // namespace dirichlet

#endif
