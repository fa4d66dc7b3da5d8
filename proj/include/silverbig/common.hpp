#ifndef SILVERBIG_COMMON_HPP
#define SILVERBIG_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace silverbig {

// Raised when an operation is called with inputs outside its contract.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the text readers on malformed input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_search_budget = 10'000'000;
inline constexpr std::uint64_t default_decider_budget = 100'000'000;

// Node/step counter shared by the exhaustive searches. Once spent past the
// limit it stays exhausted, so callers can test it after unwinding.
class Budget {
public:
  explicit Budget(std::uint64_t limit = default_search_budget) : limit_(limit) {
    if (limit == 0)
      throw ParameterError("budget must be positive");
  }

  bool spend(std::uint64_t n = 1) {
    used_ += n;
    return used_ <= limit_;
  }

  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Outcome of a budgeted search: found something, proved there is nothing,
// or ran out of budget before deciding.
enum class SearchStatus { found, none, unknown };

inline const char *to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::found: return "found";
  case SearchStatus::none: return "none";
  case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

} // namespace silverbig

#endif
