#ifndef OREXP_COMMON_HPP_
#define OREXP_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orexp {

using Vertex = int;

/// Node budget shared by the exhaustive searches.  Hitting it is reported
/// through BudgetExceeded, never as a negative answer.
struct SearchLimits {
  std::uint64_t node_budget = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("work budget exceeded after " +
                           std::to_string(nodes) + " search nodes"),
        nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace orexp

#endif  // OREXP_COMMON_HPP_
