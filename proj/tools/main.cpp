#include <iostream>

#include <CLI11.hpp>

#include "fibtc/planner.hpp"
#include "fibtc/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::optional<fibtc::CoefficientRing> coefficients_flag(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    auto c = fibtc::parse_coefficients(s);
    if (!c)
        throw fibtc::BundleError("--coeffs must be f2 or z, got '" + s + "'");
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Euler-class obstructions and sphere motion planners for fibrewise topological complexity"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string coeffs;
    int kmax = -1;
    bool machine = false;
    auto* criteria = app.add_subcommand("criteria", "evaluate the cohomological criteria for a bundle");
    criteria->add_option("spec", spec_path, "bundle description file")->required();
    criteria->add_option("--kmax", kmax, "largest power searched")->check(CLI::NonNegativeNumber);
    criteria->add_option("--coeffs", coeffs, "f2 or z");
    criteria->add_flag("--machine", machine, "key=value output");

    int n = 0;
    int samples = 10000;
    std::uint64_t seed = 1;
    auto* planner = app.add_subcommand("planner", "build and verify the motion planner on S^n");
    planner->add_option("--n", n, "sphere dimension")->required();
    planner->add_option("--samples", samples, "number of sampled pairs")->check(CLI::PositiveNumber);
    planner->add_option("--seed", seed, "random seed");
    planner->add_flag("--machine", machine, "key=value output");

    std::string which;
    auto* ring = app.add_subcommand("ring", "print a completed presentation");
    ring->add_option("spec", spec_path, "bundle description file")->required();
    ring->add_option("--which", which, "proj, qtilde, grassmann or feder")->required();
    ring->add_option("--coeffs", coeffs, "f2 or z");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (criteria->parsed()) {
            fibtc::SpecFile spec = fibtc::load_spec(spec_path);
            fibtc::CriteriaOptions opt;
            if (kmax >= 0)
                opt.k_max = kmax;
            opt.coefficients = coefficients_flag(coeffs);
            fibtc::CriteriaReport report = fibtc::run_criteria(spec, opt);
            std::cout << (machine ? report.machine() : report.human());
            return report.check_failed ? kCheckFailed : kOk;
        }
        if (planner->parsed()) {
            fibtc::Planner p = fibtc::build_sphere_planner(n);
            fibtc::PlannerReport report = fibtc::verify_planner(p, samples, seed);
            if (machine) {
                std::cout << report.serialize();
            } else {
                std::cout << "planner on S^" << n << " with " << report.rules << " rules, "
                          << samples << " samples, seed " << seed << "\n"
                          << "  endpoint error      " << report.endpoint_error << "\n"
                          << "  diagonal error      " << report.diagonal_error << "\n"
                          << "  unit norm error     " << report.unit_norm_error << "\n"
                          << "  cover failures      " << report.cover_failures << "\n"
                          << "  continuity ratio    " << report.continuity_ratio << " ("
                          << report.continuity_violations << " violations)\n"
                          << "  equivariance error  " << report.equivariance_error << "\n"
                          << (report.passed() ? "all checks pass" : "CHECK FAILED") << "\n";
            }
            return report.passed() ? kOk : kCheckFailed;
        }
        if (ring->parsed()) {
            fibtc::SpecFile spec = fibtc::load_spec(spec_path);
            std::cout << fibtc::dump_ring(spec, which, coefficients_flag(coeffs));
            return kOk;
        }
    } catch (const fibtc::SpecError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const fibtc::GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const fibtc::AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
