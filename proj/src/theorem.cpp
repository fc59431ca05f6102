#include "invvec/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace invvec {

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// (head, 1^tail) builders used by the exception families
Partition with_tail(std::vector<int> head, int tail) {
    for (int i = 0; i < tail; ++i) head.push_back(1);
    return Partition(std::move(head));
}

const Partition& sporadic_lambda(int i) {
    static const std::vector<Partition> table = {
        Partition({2, 2}), Partition({2, 2, 2}), Partition({2, 2, 2, 2}),
        Partition({4, 4}), Partition({2, 2, 2, 2, 2})};
    return table[static_cast<std::size_t>(i)];
}

const Partition& sporadic_mu(int i) {
    static const std::vector<Partition> table = {
        Partition({3, 1}), Partition({3, 2, 1}), Partition({5, 3}),
        Partition({5, 3}), Partition({5, 3, 2})};
    return table[static_cast<std::size_t>(i)];
}

} // namespace

bool single_cycle_admits(const Partition& lambda) {
    const int n = lambda.n();
    if (n < 1) throw std::domain_error("single_cycle_admits: lambda must be nonempty");
    if (n >= 2 && lambda == with_tail({n - 1}, 1)) return false;
    if (n % 2 == 0 && lambda == ones(n)) return false;
    if (n >= 3 && n % 2 == 1 && lambda == with_tail({2}, n - 2)) return false;
    return true;
}

std::vector<int> exception_case_ids(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::domain_error("exception_case_ids: lambda and mu must partition the same n");
    const int n = lambda.n();
    std::vector<int> ids;
    if (n >= 2 && lambda == ones(n) && !is_even_permutation(mu)) ids.push_back(1);
    if (n >= 2 && mu == Partition({n})) {
        if (lambda == with_tail({n - 1}, 1)) ids.push_back(2);
        if (n >= 3 && n % 2 == 1 && lambda == with_tail({2}, n - 2)) ids.push_back(3);
    }
    if (n >= 5 && n % 2 == 1 && lambda == with_tail({2, 2}, n - 4) &&
        mu == Partition({n - 2, 2}))
        ids.push_back(4);
    for (int i = 0; i < 5; ++i)
        if (lambda == sporadic_lambda(i) && mu == sporadic_mu(i)) ids.push_back(5 + i);
    return ids;
}

bool admits(const Partition& lambda, const Partition& mu) {
    return exception_case_ids(lambda, mu).empty();
}

std::vector<ExceptionRecord> list_exceptions(int n, int bound) {
    std::vector<ExceptionRecord> out;
    const std::vector<Partition> all = enumerate_partitions(n, bound);
    for (const Partition& lambda : all)
        for (const Partition& mu : all)
            for (int id : exception_case_ids(lambda, mu))
                out.push_back({lambda, mu, id});
    return out;
}

bool is_persistent(CharacterEngine& engine, const Partition& mu, int bound) {
    const Partition sign = ones(mu.n());
    for (const Partition& lambda : enumerate_partitions(mu.n(), bound)) {
        if (lambda == sign) continue;
        if (multiplicity(engine, lambda, mu) < 1) return false;
    }
    return true;
}

namespace {

bool beta_ok(const Partition& lambda, int q, const Partition& beta) {
    return beta.n() == q && contains(lambda, beta) && single_cycle_admits(beta);
}

} // namespace

Partition choose_beta(const Partition& lambda, int q) {
    const int p = lambda.n() - q;
    if (q < 1 || p < 2)
        throw std::domain_error("choose_beta: requires q >= 1 and lambda of size >= q + 2");
    if (lambda == ones(lambda.n()))
        throw std::domain_error("choose_beta: lambda must not be a single column");

    Partition beta;
    if (q == 1) {
        beta = Partition({1});
    } else if (contains(lambda, with_tail({q - 1}, 1))) {
        // skew cells of lambda/(q-1,1): first row, else first column, else
        // at least two in the second row
        if (lambda.part(0) >= q) beta = Partition({q});
        else if (lambda.length() >= 3) beta = with_tail({q - 2}, 2);
        else beta = Partition({q - 2, 2});
    } else if (q % 2 == 0 && contains(lambda, ones(q))) {
        beta = with_tail({2}, q - 2);
    } else if (q % 2 == 1 && contains(lambda, with_tail({2}, q - 2))) {
        if (lambda.part(0) >= 3) beta = with_tail({3}, q - 3);
        else if (lambda.length() >= q) beta = ones(q);
        else beta = with_tail({2, 2}, q - 4);
    } else {
        // lambda contains none of the single-cycle exception shapes of size
        // q, so any contained beta works; take the first in canonical order
        for (const Partition& candidate : enumerate_partitions(q)) {
            if (contains(lambda, candidate)) { beta = candidate; break; }
        }
    }
    if (!beta_ok(lambda, q, beta))
        throw InternalError("choose_beta: constructed beta failed its postcondition");
    return beta;
}

std::optional<WitnessPair> find_witness(const Partition& lambda, int p, int q) {
    if (p < 1 || q < 1 || p + q != lambda.n())
        throw std::domain_error("find_witness: lambda must partition p + q with p, q >= 1");

    auto certify = [&](const Partition& alpha, const Partition& beta)
        -> std::optional<WitnessPair> {
        if (!contains(lambda, alpha)) return std::nullopt;
        auto tableaux = enumerate_lr_tableaux(SkewShape(lambda, alpha), beta);
        if (tableaux.empty()) return std::nullopt;
        return WitnessPair{alpha, beta, std::move(tableaux.front())};
    };

    // Guided construction: beta by the case analysis, alpha as the weight of
    // the column tableau of lambda/beta.
    if (p >= 2 && lambda != ones(lambda.n())) {
        Partition beta = choose_beta(lambda, q);
        Partition alpha = canonical_column_tableau(lambda, beta).weight();
        if (single_cycle_admits(alpha)) {
            if (auto witness = certify(alpha, beta)) return witness;
        }
    }

    // Exhaustive scan over contained admissible pairs.
    for (const Partition& alpha : enumerate_partitions(p)) {
        if (!contains(lambda, alpha) || !single_cycle_admits(alpha)) continue;
        for (const Partition& beta : enumerate_partitions(q)) {
            if (!contains(lambda, beta) || !single_cycle_admits(beta)) continue;
            if (lr_coefficient(lambda, alpha, beta) < 1) continue;
            if (auto witness = certify(alpha, beta)) return witness;
        }
    }
    return std::nullopt;
}

VerifyReport verify_classification(int max_n, int jobs, int bound) {
    if (max_n > bound)
        throw SizeLimitError("verify_classification: max_n exceeds bound");

    struct Task {
        int n;
        Partition mu;
        const std::vector<Partition>* lambdas;
    };
    std::vector<std::vector<Partition>> by_n;
    by_n.reserve(static_cast<std::size_t>(std::max(max_n, 0)) + 1);
    for (int n = 0; n <= max_n; ++n) by_n.push_back(enumerate_partitions(n, bound));

    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& mu : by_n[static_cast<std::size_t>(n)])
            tasks.push_back({n, mu, &by_n[static_cast<std::size_t>(n)]});

    struct TaskResult {
        std::vector<VerifyRow> rows;
        std::vector<VerifyDisagreement> disagreements;
        long long checked = 0;
    };
    std::vector<TaskResult> results(tasks.size());

    auto run_task = [&](CharacterEngine& engine, std::size_t i) {
        const Task& task = tasks[i];
        TaskResult& result = results[i];
        for (const Partition& lambda : *task.lambdas) {
            Int mult = multiplicity(engine, lambda, task.mu);
            bool oracle = admits(lambda, task.mu);
            ++result.checked;
            if (oracle != (mult >= 1))
                result.disagreements.push_back({task.n, lambda, task.mu, oracle, mult});
            if (!oracle)
                result.rows.push_back(
                    {task.n, lambda, task.mu, exception_case_ids(lambda, task.mu), mult});
        }
    };

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        CharacterEngine engine;
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(engine, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                CharacterEngine engine;
                for (std::size_t i = next.fetch_add(1); i < tasks.size();
                     i = next.fetch_add(1))
                    run_task(engine, i);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    VerifyReport report;
    report.max_n = max_n;
    for (TaskResult& result : results) {
        report.pairs_checked += result.checked;
        std::move(result.rows.begin(), result.rows.end(),
                  std::back_inserter(report.exceptions));
        std::move(result.disagreements.begin(), result.disagreements.end(),
                  std::back_inserter(report.disagreements));
    }
    auto row_key = [](const auto& r) { return std::tie(r.n, r.lambda, r.mu); };
    std::sort(report.exceptions.begin(), report.exceptions.end(),
              [&](const auto& a, const auto& b) { return row_key(a) < row_key(b); });
    std::sort(report.disagreements.begin(), report.disagreements.end(),
              [&](const auto& a, const auto& b) { return row_key(a) < row_key(b); });
    return report;
}

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

} // namespace

std::string report_to_tsv(const VerifyReport& report) {
    std::string out = "n\tlambda\tmu\tcase_ids\tmultiplicity\n";
    for (const VerifyRow& row : report.exceptions) {
        out += std::to_string(row.n);
        out += '\t';
        out += row.lambda.to_string();
        out += '\t';
        out += row.mu.to_string();
        out += '\t';
        out += join_ids(row.case_ids);
        out += '\t';
        out += row.invariant_multiplicity.str();
        out += '\n';
    }
    return out;
}

nlohmann::json report_to_json(const VerifyReport& report) {
    nlohmann::json exceptions = nlohmann::json::array();
    for (const VerifyRow& row : report.exceptions)
        exceptions.push_back({{"n", row.n},
                              {"lambda", row.lambda.to_string()},
                              {"mu", row.mu.to_string()},
                              {"case_ids", row.case_ids},
                              {"multiplicity", row.invariant_multiplicity.str()}});
    nlohmann::json disagreements = nlohmann::json::array();
    for (const VerifyDisagreement& d : report.disagreements)
        disagreements.push_back({{"n", d.n},
                                 {"lambda", d.lambda.to_string()},
                                 {"mu", d.mu.to_string()},
                                 {"oracle_admits", d.oracle_admits},
                                 {"multiplicity", d.brute_multiplicity.str()}});
    return {{"max_n", report.max_n},
            {"pairs_checked", report.pairs_checked},
            {"ok", report.ok()},
            {"exceptions", exceptions},
            {"disagreements", disagreements}};
}

} // namespace invvec
