// invvec: exact queries and brute-force verification for invariant vectors
// of cyclic subgroups in irreducible symmetric group representations.
//
// Every command prints one JSON envelope on stdout:
//   {"schema_version": "1", "command": ..., "result": ..., "timing_ms": ...}
// except in --format tsv mode, where the raw table is printed instead.
// Exit codes: 0 success, 1 verification disagreement, 2 usage/parse error,
// 3 enumeration bound exceeded.

#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "invvec/lr.hpp"
#include "invvec/spectral.hpp"
#include "invvec/symfunc.hpp"
#include "invvec/theorem.hpp"

using json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

void emit_envelope(const std::string& command, json result, Clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    json envelope = {{"schema_version", "1"},
                     {"command", command},
                     {"result", std::move(result)},
                     {"timing_ms", ms.count()}};
    std::cout << envelope.dump(2) << "\n";
}

json tableau_to_json(const invvec::LRTableau& tableau) {
    json rows = json::array();
    for (const auto& row : tableau.rows()) rows.push_back(row);
    return {{"outer", tableau.shape().outer().to_string()},
            {"inner", tableau.shape().inner().to_string()},
            {"weight", tableau.weight().to_string()},
            {"rows", rows}};
}

int run(int argc, char** argv) {
    CLI::App app{"Exact invariant-vector queries for symmetric group representations"};
    app.require_subcommand(1);
    unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());

    // admits
    std::string admits_lambda, admits_mu;
    bool oracle_only = false;
    auto* cmd_admits = app.add_subcommand(
        "admits", "Does a permutation of cycle type mu have an invariant vector in V_lambda?");
    cmd_admits->add_option("--lambda", admits_lambda)->required();
    cmd_admits->add_option("--mu", admits_mu)->required();
    cmd_admits->add_flag("--oracle-only", oracle_only, "skip the brute-force multiplicity");

    // fmu
    std::string fmu_mu, fmu_format = "json";
    int fmu_bound = invvec::kDefaultEnumerationBound;
    auto* cmd_fmu = app.add_subcommand("fmu", "Schur expansion of f_mu = ch Ind_{C_mu}^{S_n} 1");
    cmd_fmu->add_option("--mu", fmu_mu)->required();
    cmd_fmu->add_option("--format", fmu_format)->check(CLI::IsMember({"tsv", "json"}));
    cmd_fmu->add_option("--bound", fmu_bound);

    // exceptions
    int exc_n = 0, exc_bound = invvec::kDefaultEnumerationBound;
    auto* cmd_exceptions =
        app.add_subcommand("exceptions", "All oracle exception records at size n");
    cmd_exceptions->add_option("--n", exc_n)->required();
    cmd_exceptions->add_option("--bound", exc_bound);

    // verify
    int verify_max_n = 0, verify_bound = invvec::kDefaultEnumerationBound;
    unsigned verify_jobs = default_jobs;
    std::string verify_format = "json";
    auto* cmd_verify = app.add_subcommand(
        "verify", "Brute-force the classification against the oracle for all n <= max-n");
    cmd_verify->add_option("--max-n", verify_max_n)->required();
    cmd_verify->add_option("--jobs", verify_jobs);
    cmd_verify->add_option("--format", verify_format)->check(CLI::IsMember({"tsv", "json"}));
    cmd_verify->add_option("--bound", verify_bound);

    // character
    std::string chr_lambda, chr_mu;
    auto* cmd_character = app.add_subcommand("character", "Irreducible character chi_lambda(mu)");
    cmd_character->add_option("--lambda", chr_lambda)->required();
    cmd_character->add_option("--mu", chr_mu)->required();

    // lr
    std::string lr_outer, lr_inner, lr_weight;
    bool lr_list = false;
    auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    cmd_lr->add_option("--outer", lr_outer)->required();
    cmd_lr->add_option("--inner", lr_inner)->required();
    cmd_lr->add_option("--weight", lr_weight)->required();
    cmd_lr->add_flag("--list", lr_list, "also list every LR tableau");

    // witness
    std::string wit_lambda;
    int wit_p = 0, wit_q = 0;
    auto* cmd_witness = app.add_subcommand(
        "witness", "Certified two-cycle decomposition covering V_lambda, if one exists");
    cmd_witness->add_option("--lambda", wit_lambda)->required();
    cmd_witness->add_option("--p", wit_p)->required();
    cmd_witness->add_option("--q", wit_q)->required();

    // spectrum
    std::string spectrum_lambda, spectrum_mu;
    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "Eigenvalue multiplicities of rho_lambda(w_mu)");
    cmd_spectrum->add_option("--lambda", spectrum_lambda)->required();
    cmd_spectrum->add_option("--mu", spectrum_mu)->required();

    // immersion
    int imm_n = 0, imm_bound = invvec::kDefaultEnumerationBound;
    std::string imm_format = "json";
    auto* cmd_immersion =
        app.add_subcommand("immersion", "Verify the immersion characterization at size n");
    cmd_immersion->add_option("--n", imm_n)->required();
    cmd_immersion->add_option("--format", imm_format)->check(CLI::IsMember({"tsv", "json"}));
    cmd_immersion->add_option("--bound", imm_bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const auto start = Clock::now();
    invvec::CharacterEngine engine;

    if (cmd_admits->parsed()) {
        invvec::Partition lambda = invvec::Partition::parse(admits_lambda);
        invvec::Partition mu = invvec::Partition::parse(admits_mu);
        bool oracle = invvec::admits(lambda, mu);
        json result = {{"lambda", lambda.to_string()},
                       {"mu", mu.to_string()},
                       {"admits", oracle},
                       {"case_ids", invvec::exception_case_ids(lambda, mu)}};
        bool agree = true;
        if (!oracle_only) {
            invvec::Int mult = invvec::multiplicity(engine, lambda, mu);
            agree = oracle == (mult >= 1);
            result["multiplicity"] = mult.str();
            result["agree"] = agree;
        }
        emit_envelope("admits", std::move(result), start);
        return agree ? 0 : 1;
    }
    if (cmd_fmu->parsed()) {
        invvec::Partition mu = invvec::Partition::parse(fmu_mu);
        invvec::SchurExpansion f = invvec::frobenius_f(engine, mu, fmu_bound);
        if (fmu_format == "tsv") {
            std::cout << invvec::to_tsv(f);
            return 0;
        }
        emit_envelope("fmu",
                      {{"mu", mu.to_string()}, {"degree", f.degree()}, {"terms", to_json(f)}},
                      start);
        return 0;
    }
    if (cmd_exceptions->parsed()) {
        json records = json::array();
        // group per (lambda, mu) so the list matches the verify report
        json grouped = json::array();
        invvec::Partition last_lambda, last_mu;
        for (const invvec::ExceptionRecord& record : invvec::list_exceptions(exc_n, exc_bound)) {
            records.push_back({{"lambda", record.lambda.to_string()},
                               {"mu", record.mu.to_string()},
                               {"case_id", record.case_id}});
            if (!grouped.empty() && record.lambda == last_lambda && record.mu == last_mu) {
                grouped.back()["case_ids"].push_back(record.case_id);
            } else {
                grouped.push_back({{"lambda", record.lambda.to_string()},
                                   {"mu", record.mu.to_string()},
                                   {"case_ids", json::array({record.case_id})}});
                last_lambda = record.lambda;
                last_mu = record.mu;
            }
        }
        emit_envelope("exceptions",
                      {{"n", exc_n}, {"records", records}, {"pairs", grouped}}, start);
        return 0;
    }
    if (cmd_verify->parsed()) {
        invvec::VerifyReport report = invvec::verify_classification(
            verify_max_n, static_cast<int>(verify_jobs), verify_bound);
        if (verify_format == "tsv") std::cout << invvec::report_to_tsv(report);
        else emit_envelope("verify", invvec::report_to_json(report), start);
        return report.ok() ? 0 : 1;
    }
    if (cmd_character->parsed()) {
        invvec::Partition lambda = invvec::Partition::parse(chr_lambda);
        invvec::Partition mu = invvec::Partition::parse(chr_mu);
        invvec::Int value = engine.character(lambda, mu);
        emit_envelope("character",
                      {{"lambda", lambda.to_string()},
                       {"mu", mu.to_string()},
                       {"value", value.str()}},
                      start);
        return 0;
    }
    if (cmd_lr->parsed()) {
        invvec::Partition outer = invvec::Partition::parse(lr_outer);
        invvec::Partition inner = invvec::Partition::parse(lr_inner);
        invvec::Partition weight = invvec::Partition::parse(lr_weight);
        long long coeff = invvec::lr_coefficient(outer, inner, weight);
        json result = {{"outer", outer.to_string()},
                       {"inner", inner.to_string()},
                       {"weight", weight.to_string()},
                       {"coefficient", std::to_string(coeff)}};
        if (lr_list) {
            json tableaux = json::array();
            if (coeff > 0)
                for (const auto& t :
                     invvec::enumerate_lr_tableaux(invvec::SkewShape(outer, inner), weight))
                    tableaux.push_back(tableau_to_json(t));
            result["tableaux"] = std::move(tableaux);
        }
        emit_envelope("lr", std::move(result), start);
        return 0;
    }
    if (cmd_witness->parsed()) {
        invvec::Partition lambda = invvec::Partition::parse(wit_lambda);
        auto witness = invvec::find_witness(lambda, wit_p, wit_q);
        json result = {{"lambda", lambda.to_string()},
                       {"p", wit_p},
                       {"q", wit_q},
                       {"found", witness.has_value()}};
        if (witness) {
            result["alpha"] = witness->alpha.to_string();
            result["beta"] = witness->beta.to_string();
            result["certificate"] = tableau_to_json(witness->certificate);
        }
        emit_envelope("witness", std::move(result), start);
        return 0;
    }
    if (cmd_spectrum->parsed()) {
        invvec::Partition lambda = invvec::Partition::parse(spectrum_lambda);
        invvec::Partition mu = invvec::Partition::parse(spectrum_mu);
        invvec::EigenvalueProfile profile = invvec::eigenvalue_profile(engine, lambda, mu);
        json mults = json::array();
        for (const invvec::Int& m : profile.multiplicities) mults.push_back(m.str());
        emit_envelope("spectrum",
                      {{"lambda", lambda.to_string()},
                       {"mu", mu.to_string()},
                       {"order", profile.order},
                       {"multiplicities", std::move(mults)},
                       {"nonzero", profile.nonzero_string()}},
                      start);
        return 0;
    }
    if (cmd_immersion->parsed()) {
        invvec::ImmersionReport report = invvec::verify_immersion(engine, imm_n, imm_bound);
        if (imm_format == "tsv") std::cout << invvec::immersion_report_to_tsv(report);
        else emit_envelope("immersion", invvec::immersion_report_to_json(report), start);
        return report.ok() ? 0 : 1;
    }
    std::cerr << "no subcommand\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const invvec::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const invvec::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
