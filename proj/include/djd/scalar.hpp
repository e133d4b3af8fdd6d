#ifndef DJD_SCALAR_HPP
#define DJD_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace djd {

using Int = boost::multiprecision::cpp_int;

/// Exact rational coefficient type. cpp_rational keeps every value reduced
/// with a positive denominator, so equality is plain value equality and no
/// rounding can ever occur.
using Scalar = boost::multiprecision::cpp_rational;

/// Library-level error (bad presentation, depth overflow, mismatched
/// algebras, tripped termination guard, ...).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Scalar frac(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    return Scalar(Int(num), Int(den));
}

inline Scalar half(long num) { return frac(num, 2); }

/// base^k for k of either sign; negative k requires base != 0.
inline Scalar spow(const Scalar& base, long k) {
    if (k < 0 && base == 0) throw Error("negative power of zero");
    Scalar acc = 1;
    const Scalar b = k < 0 ? Scalar(Scalar(1) / base) : base;
    for (long i = 0; i < std::labs(k); ++i) acc *= b;
    return acc;
}

inline Int factorial(long n) {
    Int acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

/// base(base-1)...(base-k+1), k factors; defined for any integer base.
inline Int falling_factorial(long base, long k) {
    Int acc = 1;
    for (long i = 0; i < k; ++i) acc *= Int(base - i);
    return acc;
}

/// base(base+1)...(base+k-1), k factors.
inline Int rising_factorial(long base, long k) {
    Int acc = 1;
    for (long i = 0; i < k; ++i) acc *= Int(base + i);
    return acc;
}

/// "p" or "p/q"; exact, suitable for JSON payloads.
inline std::string scalar_str(const Scalar& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace djd

#endif // DJD_SCALAR_HPP
