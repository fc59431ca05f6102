#include "invvec/symfunc.hpp"

#include <stdexcept>

#include "invvec/arith.hpp"
#include "invvec/lr.hpp"

namespace invvec {

SchurExpansion power_sum_to_schur(CharacterEngine& engine, const Partition& mu, int bound) {
    SchurExpansion result(mu.n());
    for (const Partition& lambda : enumerate_partitions(mu.n(), bound))
        result.add(lambda, engine.character(lambda, mu));
    return result;
}

SchurExpansion frobenius_f(CharacterEngine& engine, const Partition& mu, int bound) {
    if (mu.empty()) throw std::domain_error("frobenius_f: mu must be nonempty");
    const long long m = order_of(mu);
    SchurExpansion scaled(mu.n());
    for (long long j = 0; j < m; ++j) {
        SchurExpansion term = power_sum_to_schur(engine, power_cycle_type(mu, j), bound);
        for (const auto& [key, coeff] : term.terms()) scaled.add(key, coeff);
    }
    SchurExpansion result(mu.n());
    for (const auto& [key, coeff] : scaled.terms()) {
        if (coeff % m != 0)
            throw InternalError("frobenius_f: fixed-point sum not divisible by the group order");
        result.add(key, coeff / m);
    }
    return result;
}

Int multiplicity(CharacterEngine& engine, const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::domain_error("multiplicity: lambda and mu must partition the same n");
    const long long m = order_of(mu);
    Int sum = 0;
    for (long long d : divisors(m))
        sum += Int(totient(m / d)) * engine.character(lambda, power_cycle_type(mu, d));
    if (sum % m != 0)
        throw InternalError("multiplicity: fixed-point sum not divisible by the group order");
    return sum / m;
}

bool dominates_expansion(const SchurExpansion& f, const SchurExpansion& g) {
    if (f.degree() != g.degree())
        throw std::domain_error("dominates_expansion: degrees differ");
    for (const auto& [key, coeff] : g.terms())
        if (f.coefficient(key) < coeff) return false;
    for (const auto& [key, coeff] : f.terms())
        if (coeff < 0 && !g.has(key)) return false;
    return true;
}

SchurExpansion expansion_product(const SchurExpansion& f, const SchurExpansion& g, int bound) {
    SchurExpansion result(f.degree() + g.degree());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            SchurExpansion prod = schur_product(a, b, bound);
            Int scale = ca * cb;
            for (const auto& [key, c] : prod.terms()) result.add(key, scale * c);
        }
    }
    return result;
}

} // namespace invvec
