// Acceptance suite: runs every reproduction check and prints one line per
// criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "polyneigh/verify.hpp"

namespace {

const std::map<int, std::string> kCriteria = {
    {1, "facet counts of the four minimal 0/1 examples (9, 12, 16, 14)"},
    {2, "all four examples are 2-neighborly with complete edge sets"},
    {3, "cyclic 4-polytopes: n(n-3)/2 facets, 2-neighborly, formula agreement (n = 6..10)"},
    {4, "pyramids over P4,6 add one vertex and one facet per fold (r = 1..3)"},
    {5, "join of P4,6 with itself: 9-dimensional, 12 vertices, 18 facets, 2-neighborly"},
    {6, "g-vector of cyclic(d, n) matches the binomial formula and reconstructs f"},
    {7, "closed-form simplicial minimum equals the g-theorem facet bound (d = 4..10)"},
    {8, "every vertex of P5,8 and P5,9 lies on at least f_0 - 1 facets"},
    {9, "incidence inequalities hold for i <= 3; f_3 >= f_2 in dimension 6"},
    {10, "P6,10: 14 facets >= 10 vertices and not dual 2-neighborly"},
    {11, "dimension-5 lower bound values and v^{4/3} growth band"},
    {12, "pyramids over P6,10 witness the [d+7, d+8] bracket at v = d+4"},
    {13, "oracle and incremental hulls agree on fixtures and 50 random 0/1 polytopes"},
    {14, "Euler relation and ridge degree 2 on every computed face structure"},
};

} // namespace

int main(int argc, char** argv) {
    polyneigh::verify::Options opts;
    opts.fixtures_dir = POLYNEIGH_FIXTURES_DIR;
    if (argc > 1)
        opts.fixtures_dir = argv[1];

    polyneigh::verify::VerificationReport report;
    try {
        report = polyneigh::verify::run_paper_checks(opts);
    } catch (const std::exception& e) {
        std::cerr << "suite failed to run: " << e.what() << "\n";
        return 1;
    }

    std::map<int, std::pair<int, int>> per_criterion; // criterion -> (passed, failed)
    std::vector<const polyneigh::verify::Check*> failures;
    for (const auto& check : report.checks) {
        auto& tally = per_criterion[check.criterion];
        (check.passed ? tally.first : tally.second)++;
        if (!check.passed)
            failures.push_back(&check);
    }

    bool all_ok = true;
    for (const auto& [criterion, description] : kCriteria) {
        const auto it = per_criterion.find(criterion);
        const int passed = it == per_criterion.end() ? 0 : it->second.first;
        const int failed = it == per_criterion.end() ? 0 : it->second.second;
        const bool ok = failed == 0 && passed > 0;
        all_ok &= ok;
        std::printf("[%s] criterion %2d: %s (%d check%s)\n", ok ? "PASS" : "FAIL", criterion,
                    description.c_str(), passed + failed, passed + failed == 1 ? "" : "s");
    }
    const auto fixture_tally = per_criterion.find(0);
    if (fixture_tally != per_criterion.end()) {
        const bool ok = fixture_tally->second.second == 0;
        all_ok &= ok;
        std::printf("[%s] fixtures agree with the built-in coordinates (%d checks)\n",
                    ok ? "PASS" : "FAIL",
                    fixture_tally->second.first + fixture_tally->second.second);
    }

    for (const auto* check : failures) {
        std::printf("  failed: %s (%s)\n    expected %s\n    actual   %s\n", check->id.c_str(),
                    check->anchor.c_str(), check->expected.dump().c_str(),
                    check->actual.dump().c_str());
    }
    std::printf("%d checks passed, %d failed\n", report.n_passed, report.n_failed);
    return all_ok ? 0 : 1;
}
