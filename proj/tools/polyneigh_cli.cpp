// Command-line front end: construct the library's polytopes, enumerate
// facets, classify neighborliness/simpliciality, evaluate bound formulas
// and run the reproduction suite.
//
// Exit codes: 0 success, 1 property/verification failure, 2 usage or parse
// error, 3 geometric validation error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polyneigh/bounds.hpp"
#include "polyneigh/classify.hpp"
#include "polyneigh/construct.hpp"
#include "polyneigh/faces.hpp"
#include "polyneigh/hull.hpp"
#include "polyneigh/json_io.hpp"
#include "polyneigh/verify.hpp"

namespace {

using namespace polyneigh;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

int env_threads() {
    const char* raw = std::getenv("POLYNEIGH_THREADS");
    if (raw == nullptr)
        return 0;
    try {
        return std::max(0, std::stoi(raw));
    } catch (const std::exception&) {
        return 0;
    }
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "oracle")
        return Algorithm::oracle;
    if (name == "incremental")
        return Algorithm::incremental;
    raise(ErrorKind::bad_range, "unknown algorithm: '" + name + "'");
}

void emit(const json& j, const std::string& output_path) {
    const std::string text = dump_json(j);
    if (output_path.empty())
        std::cout << text;
    else
        write_text_file(output_path, text);
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::parse_error:
    case ErrorKind::bad_range:
    case ErrorKind::unknown_example:
        return kExitUsage;
    default:
        return kExitValidation;
    }
}

struct CommonIo {
    std::string input;
    std::string output;
    std::string algorithm = "oracle";
};

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for 2-neighborly polytopes"};
    app.require_subcommand(1);
    const int threads = env_threads();

    // facets
    CommonIo facets_io;
    auto* cmd_facets = app.add_subcommand("facets", "Enumerate the facets of a polytope");
    cmd_facets->add_option("--input", facets_io.input, "Polytope JSON file")->required();
    cmd_facets->add_option("--output", facets_io.output, "Write the facet set here");
    cmd_facets->add_option("--algorithm", facets_io.algorithm, "oracle|incremental")
        ->check(CLI::IsMember({"oracle", "incremental"}));

    // check
    CommonIo check_io;
    std::optional<int> want_neighborly, want_simplicial, want_simple;
    auto* cmd_check = app.add_subcommand("check", "Classify a polytope and test properties");
    cmd_check->add_option("--input", check_io.input, "Polytope JSON file")->required();
    cmd_check->add_option("--output", check_io.output, "Write the report here");
    cmd_check->add_option("--algorithm", check_io.algorithm, "oracle|incremental")
        ->check(CLI::IsMember({"oracle", "incremental"}));
    cmd_check->add_option("--neighborly", want_neighborly, "Require k-neighborliness");
    cmd_check->add_option("--simplicial", want_simplicial, "Require m-simpliciality");
    cmd_check->add_option("--simple", want_simple, "Require m-simplicity");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "Build one of the library polytopes");
    cmd_construct->require_subcommand(1);
    int cyc_dim = 0, cyc_vertices = 0;
    std::string construct_output;
    auto* cmd_cyclic = cmd_construct->add_subcommand("cyclic", "Cyclic polytope C(d, n)");
    cmd_cyclic->add_option("--dim", cyc_dim, "Dimension d")->required();
    cmd_cyclic->add_option("--vertices", cyc_vertices, "Vertex count n")->required();
    cmd_cyclic->add_option("--output", construct_output, "Write the polytope here");

    std::string pyr_base;
    int pyr_folds = 1;
    auto* cmd_pyramid = cmd_construct->add_subcommand("pyramid", "r-fold pyramid over a base");
    cmd_pyramid->add_option("--base", pyr_base, "Base polytope JSON file")->required();
    cmd_pyramid->add_option("--folds", pyr_folds, "Number of pyramid steps r");
    cmd_pyramid->add_option("--output", construct_output, "Write the polytope here");

    std::string join_a, join_b;
    auto* cmd_join = cmd_construct->add_subcommand("join", "Join of two polytopes");
    cmd_join->add_option("--a", join_a, "First polytope JSON file")->required();
    cmd_join->add_option("--b", join_b, "Second polytope JSON file")->required();
    cmd_join->add_option("--output", construct_output, "Write the polytope here");

    std::string example_name;
    auto* cmd_example = cmd_construct->add_subcommand("example", "Built-in minimal example");
    cmd_example->add_option("--name", example_name, "P46|P58|P59|P610")->required();
    cmd_example->add_option("--output", construct_output, "Write the polytope here");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "Evaluate a bound formula");
    cmd_bound->require_subcommand(1);
    int b_dim = 0, b_vertices = 0, b_k = 0, b_j = 0;
    std::string bound_output;
    auto* cmd_msn = cmd_bound->add_subcommand("msn", "Minimal facets, simplicial 2-neighborly");
    cmd_msn->add_option("--dim", b_dim)->required();
    cmd_msn->add_option("--vertices", b_vertices)->required();
    cmd_msn->add_option("--output", bound_output);
    auto* cmd_gtheorem = cmd_bound->add_subcommand("gtheorem", "g-theorem face lower bound");
    cmd_gtheorem->add_option("--dim", b_dim)->required();
    cmd_gtheorem->add_option("--vertices", b_vertices)->required();
    cmd_gtheorem->add_option("--k", b_k)->required();
    cmd_gtheorem->add_option("--j", b_j)->required();
    cmd_gtheorem->add_option("--output", bound_output);
    auto* cmd_barnette = cmd_bound->add_subcommand("barnette", "Simplicial lower bound theorem");
    cmd_barnette->add_option("--dim", b_dim)->required();
    cmd_barnette->add_option("--vertices", b_vertices)->required();
    cmd_barnette->add_option("--output", bound_output);
    auto* cmd_neighborly = cmd_bound->add_subcommand("neighborly", "Neighborly facet maximum");
    cmd_neighborly->add_option("--k", b_k)->required();
    cmd_neighborly->add_option("--vertices", b_vertices)->required();
    cmd_neighborly->add_option("--output", bound_output);
    auto* cmd_dim5 = cmd_bound->add_subcommand("dim5", "Dimension-5 facet lower bound");
    cmd_dim5->add_option("--vertices", b_vertices)->required();
    cmd_dim5->add_option("--output", bound_output);
    auto* cmd_mn_known = cmd_bound->add_subcommand("mn-known", "Known bracket for mn(d, v)");
    cmd_mn_known->add_option("--dim", b_dim)->required();
    cmd_mn_known->add_option("--vertices", b_vertices)->required();
    cmd_mn_known->add_option("--output", bound_output);

    // verify-paper
    std::string fixtures_dir = "fixtures";
    std::string filter;
    std::string verify_output;
    std::string verify_algorithm = "oracle";
    auto* cmd_verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");
    cmd_verify->add_option("--fixtures", fixtures_dir, "Fixture directory (default: fixtures)");
    cmd_verify->add_option("--filter", filter, "Only run checks whose id contains this substring");
    cmd_verify->add_option("--output", verify_output, "Write the JSON report here");
    cmd_verify->add_option("--algorithm", verify_algorithm, "oracle|incremental")
        ->check(CLI::IsMember({"oracle", "incremental"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_facets->parsed()) {
            const Polytope p = polytope_from_json(read_json_file(facets_io.input));
            const FacetSet fs =
                enumerate_facets(p, parse_algorithm(facets_io.algorithm), threads);
            emit(facetset_to_json(fs), facets_io.output);
            return kExitOk;
        }
        if (cmd_check->parsed()) {
            const Polytope p = polytope_from_json(read_json_file(check_io.input));
            const FacetSet fs = enumerate_facets(p, parse_algorithm(check_io.algorithm), threads);
            const FaceStructure fstruct = all_faces(fs, p);
            const ClassificationReport report = classify(fstruct, fs);
            emit(classification_to_json(report), check_io.output);
            bool ok = true;
            if (want_neighborly)
                ok &= is_k_neighborly(fstruct, fs, *want_neighborly);
            if (want_simplicial)
                ok &= is_m_simplicial(fstruct, *want_simplicial);
            if (want_simple)
                ok &= is_m_simple(fstruct, fs, *want_simple);
            return ok ? kExitOk : kExitPropertyFailure;
        }
        if (cmd_construct->parsed()) {
            Polytope p = [&]() {
                if (cmd_cyclic->parsed())
                    return cyclic(cyc_dim, cyc_vertices);
                if (cmd_pyramid->parsed())
                    return pyramid(polytope_from_json(read_json_file(pyr_base)), pyr_folds);
                if (cmd_join->parsed())
                    return join(polytope_from_json(read_json_file(join_a)),
                                polytope_from_json(read_json_file(join_b)));
                return example(example_from_string(example_name));
            }();
            emit(polytope_to_json(p), construct_output);
            return kExitOk;
        }
        if (cmd_bound->parsed()) {
            json report;
            if (cmd_msn->parsed())
                report = json{{"name", "msn"},
                              {"params", json{{"d", b_dim}, {"v", b_vertices}}},
                              {"value", msn(b_dim, b_vertices)}};
            else if (cmd_gtheorem->parsed())
                report = json{{"name", "gtheorem"},
                              {"params",
                               json{{"d", b_dim}, {"n", b_vertices}, {"k", b_k}, {"j", b_j}}},
                              {"value", g_theorem_face_bound(b_dim, b_vertices, b_k, b_j)}};
            else if (cmd_barnette->parsed())
                report = json{{"name", "barnette"},
                              {"params", json{{"d", b_dim}, {"v", b_vertices}}},
                              {"value", barnette(b_dim, b_vertices)}};
            else if (cmd_neighborly->parsed())
                report = json{{"name", "neighborly"},
                              {"params", json{{"k", b_k}, {"n", b_vertices}}},
                              {"value", neighborly_max_facets(b_k, b_vertices)}};
            else if (cmd_dim5->parsed())
                report = json{{"name", "dim5"},
                              {"params", json{{"v", b_vertices}}},
                              {"value", dim5_lower_bound(b_vertices)}};
            else {
                const KnownBound kb = mn_known(b_dim, b_vertices);
                report = json{{"name", "mn-known"},
                              {"params", json{{"d", b_dim}, {"v", b_vertices}}},
                              {"lower", kb.lower},
                              {"exact", kb.exact},
                              {"source", kb.source}};
                if (kb.upper)
                    report["upper"] = *kb.upper;
                if (kb.exact)
                    report["value"] = kb.lower;
            }
            emit(report, bound_output);
            return kExitOk;
        }
        // verify-paper
        if (!std::filesystem::is_directory(fixtures_dir)) {
            std::cerr << "error: fixtures directory not found: " << fixtures_dir << "\n";
            return kExitUsage;
        }
        verify::Options opts;
        opts.fixtures_dir = fixtures_dir;
        opts.filter = filter;
        opts.algorithm = parse_algorithm(verify_algorithm);
        opts.threads = threads;
        const verify::VerificationReport report = verify::run_paper_checks(opts);
        for (const auto& check : report.checks) {
            std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.id << " (" << check.anchor
                      << ")";
            if (!check.passed)
                std::cout << "\n       expected " << check.expected.dump() << "\n       actual   "
                          << check.actual.dump();
            std::cout << "\n";
        }
        std::cout << "summary: " << report.n_passed << " passed, " << report.n_failed
                  << " failed\n";
        if (!verify_output.empty())
            write_text_file(verify_output, dump_json(verify::report_to_json(report)));
        return report.n_failed == 0 ? kExitOk : kExitPropertyFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
