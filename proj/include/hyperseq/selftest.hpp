#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hyperseq/campaigns.hpp"
#include "hyperseq/report.hpp"
#include "hyperseq/transforms.hpp"

namespace hyperseq {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::int64_t elapsed_ms = 0;
};

namespace detail {

inline std::string report_summary(const VerificationReport& report) {
    std::ostringstream out;
    out << report.identity << ": " << status_name(report.status);
    if (report.counterexample) {
        out << " at n=" << report.counterexample->n << " (lhs="
            << report.counterexample->lhs.to_string()
            << ", rhs=" << report.counterexample->rhs.to_string() << ")";
    }
    if (report.status == VerifyStatus::InvalidParam && !report.notes.empty())
        out << " (" << report.notes << ")";
    return out.str();
}

struct CampaignRun {
    std::string id;
    long trials;
    unsigned n_max;
    std::uint64_t seed;
};

inline CriterionResult run_campaign_group(int index, std::string name,
                                          const std::vector<CampaignRun>& runs,
                                          std::int64_t budget_ms) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.index = index;
    result.name = std::move(name);
    result.pass = true;
    long trial_count = 0;
    for (const auto& run : runs) {
        const VerificationReport report = run_campaign(run.id, run.trials, run.n_max, run.seed);
        trial_count += report.trials;
        if (!report.passed()) {
            result.pass = false;
            result.detail = report_summary(report);
            break;
        }
    }
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (result.pass && result.elapsed_ms >= budget_ms) {
        result.pass = false;
        result.detail = "exceeded the " + std::to_string(budget_ms) + " ms budget";
    }
    if (result.pass) {
        std::ostringstream out;
        out << runs.size() << " campaigns, " << trial_count << " trials, all exact, within "
            << budget_ms << " ms";
        result.detail = out.str();
    }
    return result;
}

/// Flips the sign of the (n, k) = (2, 1) entry of one kernel and reruns a
/// round-trip; detection means the round-trip no longer returns its input.
inline bool mutation_detected(const TransformSpec& spec, bool mutate_inverse) {
    const auto flip = [](const TriangularKernel& kernel) {
        return TriangularKernel{[kernel](unsigned n, unsigned k) {
                                    const GaussianRational c = kernel.coeff(n, k);
                                    return (n == 2 && k == 1) ? -c : c;
                                },
                                kernel.description + " [flipped (2,1)]"};
    };
    Sequence x;
    for (long n = 0; n < 16; ++n)
        x.entries.emplace_back(Rational(2 * n + 1));

    TriangularKernel forward = kernel_for(spec);
    TriangularKernel backward = kernel_for(invert(spec));
    if (mutate_inverse)
        backward = flip(backward);
    else
        forward = flip(forward);
    const Sequence back = apply(backward, apply(forward, x));
    return back != x;
}

inline CriterionResult mutation_criterion(int index) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.index = index;
    result.name = "mutation sensitivity of the round-trip gate";
    result.pass = true;

    const std::vector<TransformSpec> specs{
        {TransformKind::L, GaussianRational(Rational(3, 2))},
        {TransformKind::L, GaussianRational(0)},
        {TransformKind::LTilde, GaussianRational(Rational(3, 2))},
        {TransformKind::LTilde, GaussianRational(0)},
        {TransformKind::LTilde, GaussianRational(-1)},
        {TransformKind::Lab, GaussianRational(Rational(3, 2)), GaussianRational(Rational(5, 3))},
        {TransformKind::Lab, GaussianRational(0), GaussianRational(Rational(5, 3))},
    };
    int checks = 0;
    for (const auto& spec : specs) {
        for (bool mutate_inverse : {false, true}) {
            ++checks;
            if (!mutation_detected(spec, mutate_inverse)) {
                result.pass = false;
                result.detail = std::string("undetected sign flip in ") +
                                (mutate_inverse ? kernel_for(invert(spec)).description
                                                : kernel_for(spec).description);
                break;
            }
        }
        if (!result.pass)
            break;
    }
    if (result.pass)
        result.detail = std::to_string(checks) + " kernel mutations all detected";
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return result;
}

} // namespace detail

/// The acceptance gate: every criterion runs exact checks at its pinned
/// trial counts, ranges and seeds.
inline std::vector<CriterionResult> run_acceptance_suite() {
    std::vector<CriterionResult> results;

    results.push_back(detail::run_campaign_group(
        1, "inverse round-trips, 200 seeded draws per family, length-16 prefixes",
        {{"roundtrip-L", 200, 16, 101},
         {"roundtrip-Ltilde", 200, 16, 102},
         {"roundtrip-Lab", 200, 16, 103}},
        30000));

    results.push_back(detail::run_campaign_group(
        2, "terminating closed forms, 200 draws each",
        {{"dixon", 200, 10, 201}, {"chu-vandermonde", 200, 12, 202}}, 10000));

    results.push_back(detail::run_campaign_group(
        3, "binomial-transform connection and its specializations, 200 draws each",
        {{"T440", 200, 10, 301},
         {"T450", 200, 10, 302},
         {"T460", 200, 10, 303},
         {"T470", 200, 10, 304},
         {"sun-chen-r0", 200, 10, 305},
         {"T448", 200, 10, 306}},
        20000));

    {
        std::vector<detail::CampaignRun> runs;
        std::uint64_t seed = 401;
        for (IdentityId id : all_identity_ids())
            runs.push_back({identity_tag(id), 50, 6, seed++});
        results.push_back(detail::run_campaign_group(
            4, "polynomial-family relations, 50 draws each, n up to 6", runs, 60000));
    }

    results.push_back(detail::run_campaign_group(
        5, "double-sum evaluations with re-derivation gates, 50 draws each",
        {{"S610", 50, 5, 501}, {"S620", 50, 5, 502}, {"S630", 50, 5, 503},
         {"S640", 50, 5, 504}},
        60000));

    results.push_back(detail::run_campaign_group(
        6, "series evaluator against the term-by-term oracle, 500 specs",
        {{"oracle-hyper", 500, 10, 601}}, 10000));

    results.push_back(detail::mutation_criterion(7));
    return results;
}

} // namespace hyperseq
