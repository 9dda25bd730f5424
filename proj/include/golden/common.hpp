#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace golden {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat &x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat &x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat &x) { return denominator(x) == 1; }

/// Nonnegative remainder of x mod m (m > 0).
inline Int mod_floor(const Int &x, const Int &m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string(const Int &x) { return x.str(); }

/// Renders a rational as "p/q" with q > 0 and the fraction reduced
/// (cpp_rational keeps it reduced); the denominator is always printed
/// so the rendering is position-independent in certificates.
inline std::string to_string(const Rat &x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Deterministic 64-bit generator (splitmix64). Used wherever the library
/// needs "random" sampling that must stay reproducible across runs,
/// platforms and worker counts.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [lo, hi] for small spans.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Internal invariant failure that signals inconsistent results from two
/// routes that must agree (e.g. the two shell enumeration strategies).
/// The command line maps this to its own exit status.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace golden
