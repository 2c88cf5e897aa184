#ifndef AMLAB_ERROR_HPP
#define AMLAB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amlab {

/// Invalid input: bad prime, bad parameter, malformed expression, ...
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class field_mismatch : public domain_error {
 public:
  using domain_error::domain_error;
};

class parse_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// An exhaustive computation would exceed the configured work budget.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error(what + " needs " + std::to_string(needed) + " iterations, budget is " +
                           std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}
  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

/// An internal consistency check failed; always a bug, never bad input.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace amlab

#endif  // AMLAB_ERROR_HPP
