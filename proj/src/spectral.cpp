#include "invvec/spectral.hpp"

#include <stdexcept>

#include "invvec/arith.hpp"
#include "invvec/symfunc.hpp"
#include "invvec/theorem.hpp"

namespace invvec {

std::string EigenvalueProfile::nonzero_string() const {
    std::string out;
    for (std::size_t k = 0; k < multiplicities.size(); ++k) {
        if (multiplicities[k] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(k);
        out += ':';
        out += multiplicities[k].str();
    }
    return out;
}

EigenvalueProfile eigenvalue_profile(CharacterEngine& engine, const Partition& lambda,
                                     const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::domain_error("eigenvalue_profile: lambda and mu must partition the same n");
    const long long m = order_of(mu);
    EigenvalueProfile profile;
    profile.order = m;
    profile.multiplicities.assign(static_cast<std::size_t>(m), Int(0));

    std::vector<long long> divs = divisors(m);
    std::vector<Int> chi;
    chi.reserve(divs.size());
    for (long long d : divs) chi.push_back(engine.character(lambda, power_cycle_type(mu, d)));

    for (long long k = 0; k < m; ++k) {
        Int sum = 0;
        for (std::size_t i = 0; i < divs.size(); ++i)
            sum += chi[i] * ramanujan_sum(m / divs[i], k);
        if (sum % m != 0)
            throw InternalError("eigenvalue_profile: multiplicity sum not divisible by the order");
        profile.multiplicities[static_cast<std::size_t>(k)] = sum / m;
    }
    return profile;
}

bool immersed(CharacterEngine& engine, const Partition& lambda, const Partition& kappa,
              int n, int bound) {
    if (lambda.n() != n || kappa.n() != n)
        throw std::domain_error("immersed: lambda and kappa must partition n");
    for (const Partition& mu : enumerate_partitions(n, bound)) {
        EigenvalueProfile small = eigenvalue_profile(engine, lambda, mu);
        EigenvalueProfile big = eigenvalue_profile(engine, kappa, mu);
        for (std::size_t k = 0; k < small.multiplicities.size(); ++k)
            if (small.multiplicities[k] > big.multiplicities[k]) return false;
    }
    return true;
}

ImmersionReport verify_immersion(CharacterEngine& engine, int n, int bound) {
    ImmersionReport report;
    report.n = n;
    const std::vector<Partition> all = enumerate_partitions(n, bound);
    const Partition trivial({n});
    const Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));

    // profiles[i][j]: spectrum of rho_{all[i]}(w_{all[j]})
    std::vector<std::vector<EigenvalueProfile>> profiles(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        Int dim = dimension(all[i]);
        for (std::size_t j = 0; j < all.size(); ++j) {
            EigenvalueProfile p = eigenvalue_profile(engine, all[i], all[j]);
            ++report.profiles_checked;
            Int total = 0;
            for (const Int& v : p.multiplicities) total += v;
            if (total != dim)
                report.disagreements.push_back("profile of (" + all[i].to_string() + ", " +
                                               all[j].to_string() +
                                               ") does not sum to the dimension");
            if (p.multiplicities[0] != multiplicity(engine, all[i], all[j]))
                report.disagreements.push_back("eigenvalue-1 multiplicity of (" +
                                               all[i].to_string() + ", " + all[j].to_string() +
                                               ") differs from the invariant multiplicity");
            profiles[i].push_back(std::move(p));
        }
    }

    auto profile_le = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < all.size(); ++j)
            for (std::size_t k = 0; k < profiles[a][j].multiplicities.size(); ++k)
                if (profiles[a][j].multiplicities[k] > profiles[b][j].multiplicities[k])
                    return false;
        return true;
    };

    std::size_t trivial_idx = 0, sign_idx = all.size() - 1; // canonical order
    if (all[trivial_idx] != trivial || all[sign_idx] != sign)
        throw InternalError("verify_immersion: unexpected enumeration order");

    for (std::size_t i = 0; i < all.size(); ++i) {
        ImmersionRow row{all[i], profile_le(trivial_idx, i), profile_le(sign_idx, i), true, true};
        Partition conj = conjugate(all[i]);
        for (const Partition& mu : all) {
            if (!admits(all[i], mu)) row.expected_trivial = false;
            if (!admits(conj, mu)) row.expected_sign = false;
        }
        if (row.trivial_immersed != row.expected_trivial)
            report.disagreements.push_back("trivial immersion mismatch at lambda = " +
                                           all[i].to_string());
        if (row.sign_immersed != row.expected_sign)
            report.disagreements.push_back("sign immersion mismatch at lambda = " +
                                           all[i].to_string());
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::json immersion_report_to_json(const ImmersionReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ImmersionRow& row : report.rows)
        rows.push_back({{"lambda", row.lambda.to_string()},
                        {"trivial_immersed", row.trivial_immersed},
                        {"sign_immersed", row.sign_immersed},
                        {"expected_trivial", row.expected_trivial},
                        {"expected_sign", row.expected_sign}});
    return {{"n", report.n},
            {"profiles_checked", report.profiles_checked},
            {"ok", report.ok()},
            {"rows", rows},
            {"disagreements", report.disagreements}};
}

std::string immersion_report_to_tsv(const ImmersionReport& report) {
    std::string out = "lambda\ttrivial_immersed\tsign_immersed\texpected_trivial\texpected_sign\n";
    for (const ImmersionRow& row : report.rows) {
        out += row.lambda.to_string();
        out += '\t';
        out += row.trivial_immersed ? "true" : "false";
        out += '\t';
        out += row.sign_immersed ? "true" : "false";
        out += '\t';
        out += row.expected_trivial ? "true" : "false";
        out += '\t';
        out += row.expected_sign ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace invvec
