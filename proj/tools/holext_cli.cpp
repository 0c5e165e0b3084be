// holext: command-line front end for the extendibility tests, witness
// construction, counterexample campaigns and oracle cross-checks.
//
// Every command prints exactly one JSON document on stdout; diagnostics go to
// stderr. Exit statuses: 0 success / Extendible, 2 input or usage error,
// 3 NotExtendible, 4 Inconclusive, 5 nothing to witness, 6 witness
// construction failed, 7 oracle disagreement, 1 campaign reported failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "holext/boundary_fn.hpp"
#include "holext/errors.hpp"
#include "holext/expression.hpp"
#include "holext/extend_test.hpp"
#include "holext/json_io.hpp"
#include "holext/oracle.hpp"
#include "holext/winding.hpp"
#include "holext/witness.hpp"

namespace {

using namespace holext;

constexpr int kExitOk = 0;
constexpr int kExitCampaignFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotExtendible = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitNothingToWitness = 5;
constexpr int kExitWitnessFailed = 6;
constexpr int kExitDisagree = 7;

bool g_pretty = false;

void emit(const json& doc) { std::cout << (g_pretty ? doc.dump(2) : doc.dump()) << '\n'; }

int run_synth(const std::string& text, std::size_t n, const std::string& out_path) {
    const ParsedExpression expr = parse_expression(text);
    const BoundarySamples samples = sample_expression(expr, n);
    const std::string label = format_expression(expr);
    if (out_path.empty()) {
        emit(samples_to_json(samples, label));
    } else {
        save_samples(out_path, samples, label);
        emit({{"out", out_path}, {"n", n}, {"label", label}});
    }
    if (g_pretty) std::cerr << "wrote " << n << " samples of " << label << '\n';
    return kExitOk;
}

int run_analyze(const std::string& in_path, double tol) {
    const Verdict v = verdict(load_samples(in_path), tol);
    emit(verdict_to_json(v));
    if (!v.concordant) std::cerr << "warning: extendibility criteria disagree; verdict forced to Inconclusive\n";
    if (g_pretty) {
        std::cerr << to_string(v.status) << ": negative energy " << v.negative_energy << ", worst moment n="
                  << v.worst_moment.n << " |m|=" << v.worst_moment.modulus << ", worst |G(w)|=" << v.worst_cauchy.modulus
                  << '\n';
    }
    switch (v.status) {
        case Status::Extendible: return kExitOk;
        case Status::NotExtendible: return kExitNotExtendible;
        case Status::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int run_witness(const std::string& in_path, const std::string& out_path, double tol) {
    const BoundarySamples f = load_samples(in_path);
    const PipelineResult result = pipeline(f, tol);
    if (result.certificate) {
        const json doc = certificate_to_json(*result.certificate);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + out_path);
            out << doc.dump() << '\n';
        }
        emit(doc);
        if (g_pretty) {
            std::cerr << "verified witness of degree " << result.certificate->witness.degree() << ", winding "
                      << result.certificate->winding << '\n';
        }
        return kExitOk;
    }
    json failure{{"verdict", verdict_to_json(result.verdict)}};
    int code = kExitWitnessFailed;
    if (result.verdict.status == Status::Extendible) {
        failure["failure"] = "extendible: nothing to witness";
        code = kExitNothingToWitness;
    } else if (result.verdict.status == Status::Inconclusive) {
        failure["failure"] = "verdict inconclusive: no construction attempted";
    } else {
        failure["failure"] = result.failure.value_or("unknown");
    }
    emit(failure);
    std::cerr << failure["failure"].get<std::string>() << '\n';
    return code;
}

int run_prop41(const CampaignConfig& config) {
    const CampaignReport report = prop41_campaign(config);
    emit(campaign_to_json(report));
    if (g_pretty) {
        std::cerr << report.completed << " trials, " << report.skipped << " skipped, " << report.failures.size()
                  << " failures\n";
    }
    return report.failures.empty() ? kExitOk : kExitCampaignFailure;
}

int run_oracle(const std::string& text, std::size_t n) {
    const ParsedExpression expr = parse_expression(text);
    const int oracle = rational_winding(expr.as_rational());
    const WindingResult numeric =
        winding_with_refinement([&expr](std::size_t m) { return sample_expression(expr, m); }, n);
    const bool agree = oracle == numeric.winding;
    emit({{"expression", format_expression(expr)},
          {"oracle_winding", oracle},
          {"numeric_winding", numeric.winding},
          {"agree", agree},
          {"n_used", numeric.n_used},
          {"min_modulus", numeric.min_modulus}});
    if (!agree) std::cerr << "oracle " << oracle << " vs numeric " << numeric.winding << '\n';
    return agree ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Holomorphic extendibility tests and argument-principle witnesses"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "Indent JSON and print a summary to stderr");

    std::string expr_text;
    std::string path;
    std::string out_path;
    std::size_t n = kDefaultSamples;
    double tol = kDefaultTolerance;
    CampaignConfig campaign;
    std::string sampler = "disc";

    auto* synth = app.add_subcommand("synth", "Sample an expression onto the circle grid");
    synth->add_option("expr", expr_text, "Laurent or rational expression in z")->required();
    synth->add_option("--n", n, "Sample count (power of two, >= 16)");
    synth->add_option("--out", out_path, "Output sample file");

    auto* analyze = app.add_subcommand("analyze", "Extendibility verdict for a sample file");
    analyze->add_option("input", path, "Sample file")->required();
    analyze->add_option("--tol", tol, "Relative tolerance");

    auto* witness = app.add_subcommand("witness", "Construct a verified negative-winding witness");
    witness->add_option("input", path, "Sample file")->required();
    witness->add_option("--out", out_path, "Certificate output file");
    witness->add_option("--tol", tol, "Relative tolerance for the verdict");

    auto* prop41 = app.add_subcommand("prop41", "Seeded campaign over f = z^n + 1/(2z)");
    prop41->add_option("n0", campaign.n0, "Maximum degree of P")->required();
    prop41->add_option("n", campaign.n, "Exponent n (>= n0 + 1)")->required();
    prop41->add_option("--trials", campaign.trials, "Number of trials");
    prop41->add_option("--seed", campaign.seed, "Campaign seed");
    prop41->add_option("--radius", campaign.radius, "Coefficient disc radius");
    prop41->add_option("--sampler", sampler, "disc or log_uniform")->check(CLI::IsMember({"disc", "log_uniform"}));

    auto* oracle = app.add_subcommand("oracle", "Compare numeric winding with root counting");
    oracle->add_option("expr", expr_text, "Laurent or rational expression in z")->required();
    oracle->add_option("--n", n, "Starting sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*synth) return run_synth(expr_text, n, out_path);
        if (*analyze) return run_analyze(path, tol);
        if (*witness) return run_witness(path, out_path, tol);
        if (*prop41) {
            campaign.sampler = sampler == "disc" ? CoefficientSampler::Disc : CoefficientSampler::LogUniform;
            return run_prop41(campaign);
        }
        if (*oracle) return run_oracle(expr_text, n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
