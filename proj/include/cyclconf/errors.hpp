// errors.hpp
// Exception types shared by every cyclconf module.
//
// Precondition violations throw std::invalid_argument (or std::domain_error
// for inputs outside a formula's range). Resource limits throw
// limit_exceeded so callers can tell "too big" apart from "wrong".

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclconf {

/// Hard ceiling on v for closed-formula paths.
inline constexpr std::uint64_t kFormulaLimit = 1'000'000'000ULL;
/// Hard ceiling on v for anything that enumerates subsets or searches.
inline constexpr std::uint64_t kEnumerationLimit = 10'000ULL;

/// A requested v exceeds either a hard limit or a caller-chosen cap.
class limit_exceeded : public std::runtime_error {
public:
    limit_exceeded(std::uint64_t value, std::uint64_t limit, const std::string& what)
        : std::runtime_error(what + ": v=" + std::to_string(value) + " exceeds cap " +
                             std::to_string(limit)),
          value_(value), limit_(limit) {}

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t value_;
    std::uint64_t limit_;
};

/// A hypothesis required by a construction does not hold for the input.
class hypothesis_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline void enforce_cap(std::uint64_t v, std::uint64_t cap, const char* what) {
    if (v > kEnumerationLimit) throw limit_exceeded(v, kEnumerationLimit, what);
    if (v > cap) throw limit_exceeded(v, cap, what);
}

}  // namespace detail
}  // namespace cyclconf
