#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wci {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Input could not be parsed; `position` is a byte offset into the input.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// A documented precondition of an operation does not hold for the input.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable resource budget (node count, term count, candidate count)
// was exceeded. Never silent truncation.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal assertion failed: a statement the algorithms rely on was
// violated by a computed value. Should be unreachable.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline bigint lcm_big(const bigint& a, long long b)
{
    if (a == 0 || b == 0)
        return 0;
    bigint bb = b;
    return a / boost::multiprecision::gcd(a, bb) * bb;
}

// factorial with small cache-free exact computation
inline bigint factorial(long long n)
{
    bigint r = 1;
    for (long long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline std::uint64_t fnv1a64(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace wci
