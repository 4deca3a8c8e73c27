#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace mvop {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Rational r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Multinomial k! / (tau_1! ... tau_m!) for a composition tau of k.
template <typename Seq>
Rational multinomial(int k, const Seq& tau) {
    Rational r = factorial(k);
    for (auto p : tau) r /= factorial(static_cast<int>(p));
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

}  // namespace mvop
