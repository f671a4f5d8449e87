#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperseq/gaussian.hpp"

namespace hyperseq {

struct Counterexample {
    unsigned n = 0;
    GaussianRational lhs;
    GaussianRational rhs;
};

enum class VerifyStatus { Pass, Fail, InvalidParam };

inline const char* status_name(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::InvalidParam: return "invalid-parameter";
    }
    return "?";
}

/// Outcome of one identity check or one campaign of checks. A failing
/// report always carries the first counterexample found.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameter_draw;
    unsigned n_max = 0;
    long trials = 0;
    VerifyStatus status = VerifyStatus::Pass;
    std::optional<Counterexample> counterexample;
    std::int64_t elapsed_ms = 0;
    std::uint64_t seed = 0;
    std::string notes;

    bool passed() const { return status == VerifyStatus::Pass; }
};

using ParameterDraw = std::vector<std::pair<std::string, std::string>>;

/// Compares lhs(n) against rhs(n) for all 0 <= n <= n_max.
template <class LhsFn, class RhsFn>
VerificationReport check_pointwise(std::string identity, ParameterDraw draw, unsigned n_max,
                                   LhsFn&& lhs, RhsFn&& rhs) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.parameter_draw = std::move(draw);
    report.n_max = n_max;
    report.trials = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        const GaussianRational left = lhs(n);
        const GaussianRational right = rhs(n);
        if (left != right) {
            report.status = VerifyStatus::Fail;
            report.counterexample = Counterexample{n, left, right};
            break;
        }
    }
    return report;
}

} // namespace hyperseq
