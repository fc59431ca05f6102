#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "invvec/characters.hpp"
#include "invvec/partition.hpp"

namespace invvec {

/// Exact eigenvalue multiplicities of rho_lambda(w_mu).  Index k holds the
/// multiplicity of exp(2*pi*i*k/order); every eigenvalue of rho_lambda(w_mu)
/// is such a root of unity, so the vector is the whole spectrum.
struct EigenvalueProfile {
    long long order = 1;
    std::vector<Int> multiplicities;

    /// "k:mult" pairs, zeros suppressed, space separated.
    std::string nonzero_string() const;
};

/// Spectrum of rho_lambda(w_mu), computed in integers only:
/// multiplicities[k] = (1/m) sum over d | m of chi_lambda(type of w^d)
/// multiplied by the Ramanujan sum c_{m/d}(k).  Divisions are checked exact.
/// Throws std::domain_error on size mismatch.
EigenvalueProfile eigenvalue_profile(CharacterEngine& engine, const Partition& lambda,
                                     const Partition& mu);

/// V_lambda immersed in V_kappa: for every cycle type mu of n and every k,
/// the eigenvalue multiplicity on the lambda side is <= the kappa side.
bool immersed(CharacterEngine& engine, const Partition& lambda, const Partition& kappa,
              int n, int bound = kDefaultEnumerationBound);

struct ImmersionRow {
    Partition lambda;
    bool trivial_immersed;  // V_(n) immersed in V_lambda (computed)
    bool sign_immersed;     // V_(1^n) immersed in V_lambda (computed)
    bool expected_trivial;  // oracle: admits(lambda, mu) for every mu
    bool expected_sign;     // oracle on the conjugate of lambda
};

struct ImmersionReport {
    int n = 0;
    long long profiles_checked = 0;
    std::vector<ImmersionRow> rows;
    std::vector<std::string> disagreements; // must stay empty
    bool ok() const { return disagreements.empty(); }
};

/// Brute-force check of the immersion characterization at size n: V_(n) is
/// immersed in V_lambda iff no cycle type puts (lambda, mu) in an exception
/// family, and V_(1^n) is immersed in V_lambda iff the same holds for the
/// conjugate of lambda.  Along the way every profile is validated: entries
/// sum to dimension(lambda) and entry 0 equals multiplicity(lambda, mu).
ImmersionReport verify_immersion(CharacterEngine& engine, int n,
                                 int bound = kDefaultEnumerationBound);

nlohmann::json immersion_report_to_json(const ImmersionReport& report);
std::string immersion_report_to_tsv(const ImmersionReport& report);

} // namespace invvec
