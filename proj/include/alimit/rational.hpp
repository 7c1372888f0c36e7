#ifndef ALIMIT_RATIONAL_HPP
#define ALIMIT_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace alimit {

// Exact coordinate / parameter arithmetic. Cell boundaries, landmark points
// and piecewise-linear map breakpoints are all rational, so transition graphs
// and preimage layers can be computed without rounding.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s), 1);
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Nearest rational with the given power-of-two denominator.
inline Rat snap_to_grid(double x, long long den = (1ll << 20)) {
    double scaled = x * static_cast<double>(den);
    long long num = static_cast<long long>(scaled >= 0 ? scaled + 0.5 : scaled - 0.5);
    return Rat(num, den);
}

}  // namespace alimit

#endif
