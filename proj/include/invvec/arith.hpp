#pragma once

#include <vector>

namespace invvec {

/// Divisors of q in increasing order (q >= 1).
std::vector<long long> divisors(long long q);

/// Moebius function via trial-division factorization.
int moebius(long long q);

/// Euler totient via trial-division factorization.
long long totient(long long q);

/// Ramanujan sum c_q(k): sum of k-th powers of the primitive q-th roots of
/// unity, evaluated exactly as sum over d | gcd(q, k) of d * moebius(q/d).
/// gcd(q, 0) = q, so c_q(0) = totient(q).
long long ramanujan_sum(long long q, long long k);

} // namespace invvec
