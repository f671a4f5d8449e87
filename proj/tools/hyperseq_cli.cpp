#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "hyperseq/hyperseq.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParameterError = 2;
constexpr int kExitInputError = 3;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw hyperseq::ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& err) {
        throw hyperseq::ParseError(path + ": " + err.what());
    }
}

int run_transform(const std::string& in_path, const std::string& spec_path) {
    hyperseq::Sequence input;
    hyperseq::TransformSpec spec;
    try {
        input = hyperseq::sequence_from_json(load_json(in_path));
        spec = hyperseq::transform_from_json(load_json(spec_path));
    } catch (const hyperseq::ParseError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    }
    try {
        const hyperseq::Sequence output = hyperseq::apply(hyperseq::kernel_for(spec), input);
        std::cout << hyperseq::sequence_to_json(output).dump(2) << "\n";
        return kExitPass;
    } catch (const hyperseq::Error& err) {
        std::cerr << "parameter error: " << err.what() << "\n";
        return kExitParameterError;
    }
}

int run_verify(const std::string& id, long trials, long n_max, unsigned long seed,
               const std::string& out_dir) {
    const hyperseq::Campaign* campaign = hyperseq::find_campaign(id);
    if (campaign == nullptr) {
        std::cerr << "parameter error: unknown identity tag \"" << id << "\"\n";
        return kExitParameterError;
    }
    const long effective_trials = trials >= 0 ? trials : campaign->default_trials;
    const unsigned effective_n_max =
        n_max >= 0 ? static_cast<unsigned>(n_max) : campaign->default_n_max;

    hyperseq::VerificationReport report;
    try {
        report = campaign->run(effective_trials, effective_n_max, seed);
    } catch (const hyperseq::Error& err) {
        std::cerr << "parameter error: " << err.what() << "\n";
        return kExitParameterError;
    }

    const nlohmann::json doc = hyperseq::report_to_json(report);
    std::cout << doc.dump(2) << "\n";

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const auto path = std::filesystem::path(out_dir) /
                          (id + "-seed" + std::to_string(seed) + ".json");
        std::ofstream out(path);
        if (!out) {
            std::cerr << "input error: cannot write " << path.string() << "\n";
            return kExitInputError;
        }
        out << doc.dump(2) << "\n";
    }

    switch (report.status) {
    case hyperseq::VerifyStatus::Pass: return kExitPass;
    case hyperseq::VerifyStatus::Fail: return kExitVerifyFailure;
    case hyperseq::VerifyStatus::InvalidParam: return kExitParameterError;
    }
    return kExitParameterError;
}

int run_selftest() {
    const auto results = hyperseq::run_acceptance_suite();
    bool all_pass = true;
    std::string first_failure;
    for (const auto& result : results) {
        std::cout << "criterion " << result.index << ": "
                  << (result.pass ? "PASS" : "FAIL") << " - " << result.name << " ("
                  << result.elapsed_ms << " ms) " << result.detail << "\n";
        if (!result.pass && all_pass) {
            all_pass = false;
            first_failure = result.name + " - " + result.detail;
        }
    }
    if (!all_pass) {
        std::cerr << "selftest failed: " << first_failure << "\n";
        return kExitVerifyFailure;
    }
    std::cout << "all " << results.size() << " criteria passed\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sequence transforms, terminating hypergeometric series and "
                 "identity verification"};
    app.require_subcommand(1);

    auto* transform = app.add_subcommand("transform", "Apply a transform to a sequence prefix");
    std::string in_path;
    std::string spec_path;
    transform->add_option("--in", in_path, "sequence JSON file")->required();
    transform->add_option("--spec", spec_path, "transform JSON file")->required();

    auto* verify = app.add_subcommand("verify", "Run a seeded identity campaign");
    std::string id;
    long trials = -1;
    long n_max = -1;
    unsigned long seed = 0;
    std::string out_dir;
    verify->add_option("--id", id, "identity tag (see --list)")->required();
    verify->add_option("--trials", trials, "number of parameter draws");
    verify->add_option("--nmax", n_max, "largest n checked (or prefix length)");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--out", out_dir, "directory for the report file");

    auto* list = app.add_subcommand("list", "List known identity tags");
    auto* selftest = app.add_subcommand("selftest", "Run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitParameterError;
    }

    if (transform->parsed())
        return run_transform(in_path, spec_path);
    if (verify->parsed())
        return run_verify(id, trials, n_max, seed, out_dir);
    if (list->parsed()) {
        for (const auto& campaign : hyperseq::campaigns())
            std::cout << campaign.id << " (trials=" << campaign.default_trials
                      << ", nmax=" << campaign.default_n_max << ")\n";
        return kExitPass;
    }
    if (selftest->parsed())
        return run_selftest();
    return kExitParameterError;
}
