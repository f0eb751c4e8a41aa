#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mapgirth {

using Int = boost::multiprecision::cpp_int;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k) with C(n, k) = 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

// n! / (a! b! (n-a-b)!)
inline Int multinomial2(long n, long a, long b) {
    if (a < 0 || b < 0 || a + b > n) return 0;
    return factorial(n) / factorial(a) / factorial(b) / factorial(n - a - b);
}

// Division that must be exact; throws otherwise.
inline Int exact_div(const Int& num, const Int& den, const char* what = "division") {
    if (den == 0) throw std::domain_error(std::string(what) + ": zero divisor");
    Int q = num / den;
    if (q * den != num)
        throw std::domain_error(std::string(what) + ": not exact");
    return q;
}

}  // namespace mapgirth
