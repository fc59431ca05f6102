#include "invvec/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invvec {

std::vector<long long> divisors(long long q) {
    if (q < 1) throw std::invalid_argument("divisors: q must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= q; ++d) {
        if (q % d == 0) {
            small.push_back(d);
            if (d != q / d) large.push_back(q / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(long long q) {
    if (q < 1) throw std::invalid_argument("moebius: q must be positive");
    int sign = 1;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            q /= p;
            if (q % p == 0) return 0; // squareful
            sign = -sign;
        }
    }
    if (q > 1) sign = -sign;
    return sign;
}

long long totient(long long q) {
    if (q < 1) throw std::invalid_argument("totient: q must be positive");
    long long result = q;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            result -= result / p;
            while (q % p == 0) q /= p;
        }
    }
    if (q > 1) result -= result / q;
    return result;
}

long long ramanujan_sum(long long q, long long k) {
    long long g = std::gcd(q, k < 0 ? -k : k); // gcd(q, 0) = q
    long long sum = 0;
    for (long long d : divisors(g)) sum += d * moebius(q / d);
    return sum;
}

} // namespace invvec
