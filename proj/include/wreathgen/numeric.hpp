#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wreathgen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

// Quotient of an exact division; throws on nonzero remainder.
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

inline bool is_integer(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

inline Int to_integer(const Rat& x) {
    if (!is_integer(x)) throw std::logic_error("to_integer: " + x.str() + " is not an integer");
    return boost::multiprecision::numerator(x);
}

}  // namespace wreathgen
