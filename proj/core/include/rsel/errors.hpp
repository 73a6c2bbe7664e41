#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsel {

/// Which end of a query range was rejected.
enum class Bound { lo, hi };

/// A query range that is out of bounds, inverted, or posed against an empty sequence.
class RangeError : public std::out_of_range {
public:
    RangeError(Bound bound, std::size_t lo, std::size_t hi, std::size_t n)
        : std::out_of_range(describe(bound, lo, hi, n)), bound_(bound), lo_(lo), hi_(hi), n_(n) {}

    Bound bound() const noexcept { return bound_; }
    std::size_t lo() const noexcept { return lo_; }
    std::size_t hi() const noexcept { return hi_; }
    std::size_t size() const noexcept { return n_; }

private:
    static std::string describe(Bound bound, std::size_t lo, std::size_t hi, std::size_t n) {
        std::string range = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
        if (n == 0)
            return "range " + range + " queried on an empty sequence";
        if (lo > hi)
            return "inverted range " + range + ": i=" + std::to_string(lo) + " > j=" + std::to_string(hi);
        if (bound == Bound::lo)
            return "lower bound " + std::to_string(lo) + " of range " + range + " is outside [1, " +
                   std::to_string(n) + "]";
        return "upper bound " + std::to_string(hi) + " of range " + range + " is outside [1, " +
               std::to_string(n) + "]";
    }

    Bound bound_;
    std::size_t lo_;
    std::size_t hi_;
    std::size_t n_;
};

/// A value that does not admit a total order (a floating-point NaN).
class UnorderedValueError : public std::invalid_argument {
public:
    explicit UnorderedValueError(std::size_t index)
        : std::invalid_argument("value at index " + std::to_string(index) + " is not totally ordered (NaN)"),
          index_(index) {}

    /// 1-based position of the offending value.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Checks 1 <= lo <= hi <= n, throwing a RangeError that names the offending bound.
inline void check_range(std::size_t lo, std::size_t hi, std::size_t n) {
    if (n == 0 || lo < 1)
        throw RangeError(Bound::lo, lo, hi, n);
    if (lo > hi)
        throw RangeError(Bound::hi, lo, hi, n);
    if (lo > n)
        throw RangeError(Bound::lo, lo, hi, n);
    if (hi > n)
        throw RangeError(Bound::hi, lo, hi, n);
}

}  // namespace rsel
