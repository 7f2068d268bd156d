// Command-line surface for the classification library: per-genus
// classification, vector enumeration, Jacobian reports and batch
// verification, with table and JSON output.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "surfact/report.hpp"
#include "surfact/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitUserError = 2;
constexpr int kExitResourceCap = 3;

struct CommonOpts {
    std::string format = "table";
    int workers = 0;
    int orbit_cap = 8;
    std::uint64_t max_vectors = 32'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--format", common.format, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--workers", common.workers,
                    "Worker threads (SURFACE_ACTIONS_WORKERS overrides; 0 = auto)");
    cmd->add_option("--orbit-cap", common.orbit_cap, "Max representatives listed per stratum")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-vectors", common.max_vectors,
                    "Abort enumerations beyond this many vectors");
}

surfact::ClassifyOptions classify_options(const CommonOpts& common) {
    surfact::ClassifyOptions opts;
    opts.workers = common.workers;
    opts.orbit_cap = common.orbit_cap;
    opts.max_vectors = common.max_vectors;
    return opts;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of Riemann surfaces with 3(g-1), 5(g-1) and 6(g-1) "
                 "automorphisms, g-1 prime"};
    app.require_subcommand(1);

    int genus = 0, lambda = 0;
    std::string q_range = "7..61";
    CommonOpts common;

    CLI::App* classify = app.add_subcommand("classify", "Full classification for one genus");
    classify->add_option("--genus", genus, "Surface genus g (g-1 must be prime)")->required();
    classify->add_option("--lambda", lambda, "Group order multiplier: 3, 5 or 6")->required();
    add_common(classify, common);

    CLI::App* vectors = app.add_subcommand("vectors", "Vector and orbit counts for one genus");
    vectors->add_option("--genus", genus, "Surface genus g")->required();
    vectors->add_option("--lambda", lambda, "Group order multiplier: 3, 5 or 6")->required();
    add_common(vectors, common);

    CLI::App* jacobian = app.add_subcommand("jacobian", "Jacobian decompositions for one genus");
    jacobian->add_option("--genus", genus, "Surface genus g")->required();
    jacobian->add_option("--lambda", lambda, "Group order multiplier: 3, 5 or 6")->required();
    add_common(jacobian, common);

    CLI::App* verify = app.add_subcommand("verify", "Re-derive and assert the classification "
                                                    "for every prime in a range");
    verify->add_option("--q-range", q_range, "Range lo..hi of q = g-1 (default 7..61)");
    int q_ceiling = 101;
    verify->add_option("--q-ceiling", q_ceiling, "Refuse ranges beyond this q");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUserError;
    }

    try {
        if (app.got_subcommand(classify) || app.got_subcommand(vectors) ||
            app.got_subcommand(jacobian)) {
            surfact::ClassifyOptions opts = classify_options(common);
            if (app.got_subcommand(vectors)) {
                opts.with_extensions = false;
                opts.with_jacobians = false;
            }
            surfact::ClassificationReport report = surfact::classify_genus(genus, lambda, opts);
            std::string out;
            if (app.got_subcommand(classify))
                out = common.format == "json" ? surfact::report_to_json(report)
                                              : surfact::report_to_table(report);
            else if (app.got_subcommand(vectors))
                out = common.format == "json" ? surfact::vectors_to_json(report)
                                              : surfact::vectors_to_table(report);
            else
                out = common.format == "json" ? surfact::jacobians_to_json(report)
                                              : surfact::jacobians_to_table(report);
            std::cout << out;
            return kExitOk;
        }
        if (app.got_subcommand(verify)) {
            surfact::VerifyOptions vopts;
            if (!parse_range(q_range, vopts.q_lo, vopts.q_hi)) {
                std::cerr << "invalid --q-range, expected lo..hi\n";
                return kExitUserError;
            }
            vopts.q_ceiling = q_ceiling;
            vopts.classify = classify_options(common);
            surfact::VerifyResult result = surfact::run_verify(vopts);
            std::cout << surfact::verify_summary(result);
            return result.ok() ? kExitOk : kExitAssertFailed;
        }
    } catch (const surfact::BoundExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const surfact::NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const surfact::GenusTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const surfact::UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUserError;
    }
    return kExitUserError;
}
