#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invvec/lr.hpp"
#include "invvec/symfunc.hpp"

namespace invvec {

/// Decides whether an n-cycle has a nonzero invariant vector in V_lambda.
/// False exactly for lambda = (n-1,1) [n >= 2], lambda = (1^n) with n even,
/// and lambda = (2,1^{n-2}) with n >= 3 odd.
bool single_cycle_admits(const Partition& lambda);

/// Closed-form oracle: does a permutation of cycle type mu have a nonzero
/// invariant vector in V_lambda?  False exactly on the nine exception
/// families (see exception_case_ids).  Throws std::domain_error when the
/// sizes differ.
bool admits(const Partition& lambda, const Partition& mu);

/// All exception families the pair belongs to, ascending (empty iff admits):
///   1: lambda = (1^n), w_mu odd
///   2: lambda = (n-1,1), mu = (n), n >= 2
///   3: lambda = (2,1^{n-2}), mu = (n), n >= 3 odd
///   4: lambda = (2,2,1^{n-4}), mu = (n-2,2), n >= 5 odd
///   5: ((2,2), (3,1))      6: ((2,2,2), (3,2,1))    7: ((2,2,2,2), (5,3))
///   8: ((4,4), (5,3))      9: ((2,2,2,2,2), (5,3,2))
std::vector<int> exception_case_ids(const Partition& lambda, const Partition& mu);

/// One record per (pair, family) membership.
struct ExceptionRecord {
    Partition lambda;
    Partition mu;
    int case_id;
};

/// Every ExceptionRecord at size n, sorted by (lambda, mu, case_id).
std::vector<ExceptionRecord> list_exceptions(int n, int bound = kDefaultEnumerationBound);

/// Brute force (no oracle): every irreducible of S_n other than the sign
/// representation has a w_mu-invariant vector.  Throws SizeLimitError past
/// the bound.
bool is_persistent(CharacterEngine& engine, const Partition& mu,
                   int bound = kDefaultEnumerationBound);

/// A partition beta of q with beta contained in lambda and
/// single_cycle_admits(beta), chosen by the constructive case analysis
/// (first row / first column / second row placements).  Requires lambda of
/// size p + q with p >= 2, q >= 1 and lambda != (1^{p+q}); the result is
/// postcondition-checked.
Partition choose_beta(const Partition& lambda, int q);

/// A certified decomposition proving that a permutation with one cycle of
/// length p and one of length q has an invariant vector in V_lambda:
/// single-cycle-admissible alpha and beta whose LR product covers lambda,
/// together with an explicit LR tableau of shape lambda/alpha and weight
/// beta.
struct WitnessPair {
    Partition alpha;
    Partition beta;
    LRTableau certificate;
};

/// Searches for a WitnessPair: first the guided construction (choose_beta,
/// then alpha = weight of the column tableau of lambda/beta), then, if the
/// single-cycle oracle rejects that alpha, an exhaustive scan over contained
/// pairs.  Returns nullopt exactly when no witness exists.
std::optional<WitnessPair> find_witness(const Partition& lambda, int p, int q);

struct VerifyRow {
    int n;
    Partition lambda;
    Partition mu;
    std::vector<int> case_ids;
    Int invariant_multiplicity; // always 0 for a true exception
};

struct VerifyDisagreement {
    int n;
    Partition lambda;
    Partition mu;
    bool oracle_admits;
    Int brute_multiplicity;
};

struct VerifyReport {
    int max_n = 0;
    long long pairs_checked = 0;
    std::vector<VerifyRow> exceptions;            // sorted by (n, lambda, mu)
    std::vector<VerifyDisagreement> disagreements; // must stay empty
    bool ok() const { return disagreements.empty(); }
};

/// Checks admits(lambda, mu) == (multiplicity(lambda, mu) >= 1) for every
/// pair of partitions of every n <= max_n.  jobs > 1 fans out over (n, mu)
/// tasks with one character engine per worker; the report is deterministic
/// regardless of jobs.
VerifyReport verify_classification(int max_n, int jobs = 1,
                                   int bound = kDefaultEnumerationBound);

/// TSV: "n\tlambda\tmu\tcase_ids\tmultiplicity\n" per exception row.
std::string report_to_tsv(const VerifyReport& report);
nlohmann::json report_to_json(const VerifyReport& report);

} // namespace invvec
