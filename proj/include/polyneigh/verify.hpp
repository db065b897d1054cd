#pragma once

#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polyneigh/bounds.hpp"
#include "polyneigh/classify.hpp"
#include "polyneigh/construct.hpp"
#include "polyneigh/faces.hpp"
#include "polyneigh/hull.hpp"
#include "polyneigh/json_io.hpp"

namespace polyneigh::verify {

/// One reproduction check. `passed` is computed by the check itself;
/// expected/actual are serialized for the report table. `anchor` names the
/// published statement the check exercises, so a failure points straight at
/// the contradicted figure, equation or table entry.
struct Check {
    std::string id;
    int criterion = 0; // 1..14; 0 for fixture self-consistency
    std::string anchor;
    json expected;
    json actual;
    bool passed = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    int n_passed = 0;
    int n_failed = 0;
};

struct Options {
    std::string fixtures_dir = "fixtures";
    std::string filter;
    Algorithm algorithm = Algorithm::oracle;
    int threads = 0;
};

inline json report_to_json(const VerificationReport& report) {
    json rows = json::array();
    for (const auto& c : report.checks)
        rows.push_back(json{{"check_id", c.id},
                            {"criterion", c.criterion},
                            {"paper_anchor", c.anchor},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"passed", c.passed}});
    return json{{"checks", std::move(rows)},
                {"summary", json{{"passed", report.n_passed}, {"failed", report.n_failed}}}};
}

namespace detail {

struct Instance {
    Polytope p;
    FacetSet fs;
    FaceStructure fstruct;
};

// Drops the points of a 0/1 sample that are not hull vertices; used by the
// random cross-check of the two hull algorithms.
inline std::optional<Polytope> reduce_to_vertices(int d, std::vector<Point> pts) {
    if (affine_dim(pts) != d)
        return std::nullopt;
    Polytope cand{d, std::move(pts), std::nullopt};
    auto facets = polyneigh::detail::oracle_facets(cand, 1);
    std::vector<Point> keep;
    for (std::size_t i = 0; i < cand.vertices.size(); ++i) {
        std::vector<int> meet;
        bool first = true;
        for (const auto& [plane, incident] : facets) {
            if (!std::binary_search(incident.begin(), incident.end(), static_cast<int>(i)))
                continue;
            if (first) {
                meet = incident;
                first = false;
            } else {
                std::vector<int> tmp;
                std::set_intersection(meet.begin(), meet.end(), incident.begin(), incident.end(),
                                      std::back_inserter(tmp));
                meet.swap(tmp);
            }
        }
        if (!first && meet.size() == 1)
            keep.push_back(cand.vertices[i]);
    }
    if (affine_dim(keep) != d)
        return std::nullopt;
    return Polytope{d, std::move(keep), std::nullopt};
}

class Runner {
  public:
    explicit Runner(Options opts) : opts_(std::move(opts)) {}

    VerificationReport run() {
        fixture_agreement();
        fig1_facets();
        fig1_neighborliness();
        cyclic_formula();
        pyramid_counts();
        join_counts();
        g_round_trip();
        closed_form_agreement();
        lemma2_vertex_facets();
        incidence_inequalities();
        dim6_theorem();
        dim5_bound();
        mn_d_plus_4();
        oracle_equivalence();
        euler_and_ridges();

        VerificationReport report;
        report.checks = std::move(checks_);
        for (const auto& c : report.checks)
            (c.passed ? report.n_passed : report.n_failed)++;
        return report;
    }

  private:
    Options opts_;
    std::vector<Check> checks_;
    std::deque<std::pair<std::string, Instance>> instances_;

    bool selected(const std::string& id) const {
        return opts_.filter.empty() || id.find(opts_.filter) != std::string::npos;
    }

    void add(Check check) {
        if (selected(check.id))
            checks_.push_back(std::move(check));
    }

    // Runs `body` to fill in actual/passed; an exception fails the check
    // instead of aborting the suite (a corrupted fixture must surface as a
    // red row, not a crash).
    template <typename Fn>
    void add_guarded(std::string id, int criterion, std::string anchor, json expected, Fn&& body) {
        if (!selected(id))
            return;
        Check check{std::move(id), criterion, std::move(anchor), std::move(expected), nullptr, false};
        try {
            body(check);
        } catch (const std::exception& e) {
            check.actual = json{{"error", e.what()}};
            check.passed = false;
        }
        checks_.push_back(std::move(check));
    }

    const Instance& instance(const std::string& key, const Polytope& p) {
        for (auto& [k, inst] : instances_)
            if (k == key)
                return inst;
        Instance inst;
        inst.p = p;
        inst.fs = enumerate_facets(p, opts_.algorithm, opts_.threads);
        inst.fstruct = all_faces(inst.fs, p);
        instances_.emplace_back(key, std::move(inst));
        return instances_.back().second;
    }

    Polytope fixture(const std::string& stem) {
        return polytope_from_json(read_json_file(opts_.fixtures_dir + "/" + stem + ".json"));
    }

    static const char* fig1_anchor(ExampleName name) {
        switch (name) {
        case ExampleName::P46:
            return "fig1a";
        case ExampleName::P58:
            return "fig1b";
        case ExampleName::P59:
            return "fig1c";
        case ExampleName::P610:
            return "fig1d";
        }
        return "fig1";
    }

    static const char* fig1_stem(ExampleName name) {
        switch (name) {
        case ExampleName::P46:
            return "p46";
        case ExampleName::P58:
            return "p58";
        case ExampleName::P59:
            return "p59";
        case ExampleName::P610:
            return "p610";
        }
        return "?";
    }

    static constexpr ExampleName kFig1[] = {ExampleName::P46, ExampleName::P58, ExampleName::P59,
                                            ExampleName::P610};

    void fixture_agreement() {
        for (auto name : kFig1) {
            const std::string stem = fig1_stem(name);
            add_guarded("fixtures." + stem, 0, fig1_anchor(name),
                        json{{"matches_builtin", true}}, [&](Check& check) {
                            const std::string path = opts_.fixtures_dir + "/" + stem + ".json";
                            std::ifstream in(path, std::ios::binary);
                            if (!in)
                                raise(ErrorKind::parse_error, "cannot open " + path);
                            std::stringstream buf;
                            buf << in.rdbuf();
                            const std::string bytes = buf.str();
                            const std::string builtin = dump_json(polytope_to_json(example(name)));
                            check.actual = json{{"matches_builtin", bytes == builtin}};
                            check.passed = bytes == builtin;
                        });
        }
    }

    void fig1_facets() {
        const long long expected[] = {9, 12, 16, 14};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto name = kFig1[i];
            const std::string stem = fig1_stem(name);
            add_guarded("fig1." + stem + ".facets", 1, fig1_anchor(name),
                        json{{"facets", expected[i]}}, [&, this](Check& check) {
                            const auto& inst = instance(stem, fixture(stem));
                            const long long actual = static_cast<long long>(inst.fs.facets.size());
                            check.actual = json{{"facets", actual}};
                            check.passed = actual == check.expected["facets"].get<long long>();
                        });
        }
    }

    void fig1_neighborliness() {
        for (auto name : kFig1) {
            const std::string stem = fig1_stem(name);
            add_guarded(
                "fig1." + stem + ".two-neighborly", 2, fig1_anchor(name),
                json{{"two_neighborly", true}, {"edges_complete", true}}, [&, this](Check& check) {
                    const auto& inst = instance(stem, fixture(stem));
                    const long long v = inst.fs.n_vertices;
                    const bool complete =
                        Integer(inst.fstruct.f_vector[1]) == binomial(v, 2);
                    const bool neighborly = is_k_neighborly(inst.fstruct, inst.fs, 2);
                    check.actual =
                        json{{"two_neighborly", neighborly}, {"edges_complete", complete}};
                    check.passed = complete && neighborly;
                });
        }
    }

    void cyclic_formula() {
        for (int n = 6; n <= 10; ++n) {
            add_guarded("cyclic4.v" + std::to_string(n), 3, "eq2",
                        json{{"facets", static_cast<long long>(n) * (n - 3) / 2},
                             {"two_neighborly", true}},
                        [&, this](Check& check) {
                            const auto& inst =
                                instance("cyclic4." + std::to_string(n), cyclic(4, n));
                            const long long facets = static_cast<long long>(inst.fs.facets.size());
                            const long long formula = neighborly_max_facets(2, n);
                            check.actual = json{{"facets", facets},
                                                {"two_neighborly",
                                                 is_k_neighborly(inst.fstruct, inst.fs, 2)},
                                                {"neighborly_max_facets", formula}};
                            check.passed = facets == check.expected["facets"].get<long long>() &&
                                           facets == formula &&
                                           check.actual["two_neighborly"].get<bool>();
                        });
        }
    }

    void pyramid_counts() {
        for (int r = 1; r <= 3; ++r) {
            add_guarded("pyramid.p46.r" + std::to_string(r), 4, "sec2-pyramid",
                        json{{"vertices", 6 + r}, {"facets", 9 + r}}, [&, this](Check& check) {
                            const auto& inst = instance("pyr" + std::to_string(r) + ".p46",
                                                        pyramid(example(ExampleName::P46), r));
                            check.actual =
                                json{{"vertices", inst.fs.n_vertices},
                                     {"facets", static_cast<long long>(inst.fs.facets.size())}};
                            check.passed = check.actual == check.expected;
                        });
        }
    }

    void join_counts() {
        add_guarded("join.p46.p46", 5, "sec2-join",
                    json{{"dim", 9}, {"vertices", 12}, {"facets", 18}, {"two_neighborly", true}},
                    [&, this](Check& check) {
                        const auto& inst = instance(
                            "join.p46.p46", join(example(ExampleName::P46), example(ExampleName::P46)));
                        const auto family = join_family_counts(6, 1);
                        const bool family_match =
                            family.d == inst.p.ambient_dim &&
                            family.f0 == inst.fs.n_vertices &&
                            family.f_facets == static_cast<long long>(inst.fs.facets.size());
                        check.actual = json{{"dim", inst.p.ambient_dim},
                                            {"vertices", inst.fs.n_vertices},
                                            {"facets", static_cast<long long>(inst.fs.facets.size())},
                                            {"two_neighborly",
                                             is_k_neighborly(inst.fstruct, inst.fs, 2)},
                                            {"family_counts_match", family_match}};
                        check.passed = check.actual["dim"] == check.expected["dim"] &&
                                       check.actual["vertices"] == check.expected["vertices"] &&
                                       check.actual["facets"] == check.expected["facets"] &&
                                       check.actual["two_neighborly"].get<bool>() && family_match;
                    });
    }

    void g_round_trip() {
        for (int d : {4, 5, 6}) {
            for (int n = d + 2; n <= 10; ++n) {
                std::vector<long long> expected_g;
                for (int j = 0; j <= d / 2; ++j)
                    expected_g.push_back(to_count(binomial(n - d - 2 + j, j), "g entry"));
                add_guarded("gvector.cyclic" + std::to_string(d) + ".v" + std::to_string(n), 6,
                            "eq12", json{{"g", expected_g}}, [&, this](Check& check) {
                                const auto& inst =
                                    instance("cyclic" + std::to_string(d) + "." + std::to_string(n),
                                             cyclic(d, n));
                                std::vector<long long> f{1};
                                f.insert(f.end(), inst.fstruct.f_vector.begin(),
                                         inst.fstruct.f_vector.end());
                                // g_from_f validates the reconstruction f = g M_d.
                                const GVector g = g_from_f(f, d);
                                check.actual = json{{"g", g.g}};
                                check.passed = g.g == expected_g;
                            });
            }
        }
    }

    void closed_form_agreement() {
        for (int d = 4; d <= 10; ++d) {
            add_guarded("msn.gtheorem.d" + std::to_string(d), 7, "eq3", json{{"all_equal", true}},
                        [&](Check& check) {
                            json rows = json::array();
                            bool all = true;
                            for (int v = d + 2; v <= d + 8; ++v) {
                                const long long closed = msn(d, v);
                                const long long summed = g_theorem_face_bound(d, v, 2, d - 1);
                                all &= closed == summed;
                                rows.push_back(json{{"v", v}, {"msn", closed}, {"sum", summed}});
                            }
                            check.actual = json{{"all_equal", all}, {"rows", std::move(rows)}};
                            check.passed = all;
                        });
        }
        add_guarded("msn.p46", 7, "eq3", json{{"msn", 9}, {"facets", 9}}, [&, this](Check& check) {
            const auto& inst = instance("p46", fixture("p46"));
            check.actual = json{{"msn", msn(4, 6)},
                                {"facets", static_cast<long long>(inst.fs.facets.size())}};
            check.passed = check.actual == check.expected;
        });
    }

    void lemma2_vertex_facets() {
        for (auto name : {ExampleName::P58, ExampleName::P59}) {
            const std::string stem = fig1_stem(name);
            add_guarded("lemma2." + stem, 8, "lemma2", json{{"holds", true}},
                        [&, this](Check& check) {
                            const auto& inst = instance(stem, fixture(stem));
                            int min_count = inst.fs.n_vertices;
                            for (int v = 0; v < inst.fs.n_vertices; ++v)
                                min_count = std::min(min_count, facets_at_vertex(inst.fs, v));
                            const int bound = inst.fs.n_vertices - 1;
                            check.actual = json{{"holds", min_count >= bound},
                                                {"min_facets_per_vertex", min_count},
                                                {"required", bound}};
                            check.passed = min_count >= bound;
                        });
        }
    }

    void incidence_inequalities() {
        struct Item {
            std::string key;
            Polytope p;
        };
        const Item items[] = {
            {"p46", fixture_or_builtin(ExampleName::P46)},
            {"p58", fixture_or_builtin(ExampleName::P58)},
            {"p59", fixture_or_builtin(ExampleName::P59)},
            {"p610", fixture_or_builtin(ExampleName::P610)},
            {"cyclic5.8", cyclic(5, 8)},
            {"cyclic6.9", cyclic(6, 9)},
        };
        for (const auto& item : items) {
            add_guarded("eq6." + item.key, 9, "eq6", json{{"holds", true}}, [&, this](Check& check) {
                const auto& inst = instance(item.key, item.p);
                const int m = std::min(3, inst.fstruct.dim - 1);
                auto rows = check_incidence_inequality(inst.fstruct, inst.fstruct.dim, m);
                bool all = true;
                json detail = json::array();
                for (const auto& row : rows) {
                    all &= row.holds;
                    detail.push_back(
                        json{{"i", row.i}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"holds", row.holds}});
                }
                check.actual = json{{"holds", all}, {"rows", std::move(detail)}};
                check.passed = all;
            });
        }
        for (const std::string key : {"p610", "cyclic6.9"}) {
            add_guarded("lemma1.f3-ge-f2." + key, 9, "lemma1", json{{"holds", true}},
                        [&, this](Check& check) {
                            const auto& inst =
                                instance(key, key == "p610" ? fixture("p610") : cyclic(6, 9));
                            const auto result = check_simplex_bound(inst.fstruct, 6, 3);
                            check.actual = json{{"holds", result.holds},
                                                {"f3", result.f_m},
                                                {"f2", result.f_dm1}};
                            check.passed = result.holds;
                        });
        }
    }

    void dim6_theorem() {
        add_guarded("thm-dim6.p610", 10, "thm-dim6",
                    json{{"facets", 14}, {"facets_ge_vertices", true}, {"dual_2neighborly", false}},
                    [&, this](Check& check) {
                        const auto& inst = instance("p610", fixture("p610"));
                        const long long facets = static_cast<long long>(inst.fs.facets.size());
                        check.actual = json{{"facets", facets},
                                            {"facets_ge_vertices", facets >= inst.fs.n_vertices},
                                            {"dual_2neighborly",
                                             is_dual_2neighborly(inst.fstruct, inst.fs)}};
                        check.passed = check.actual == check.expected;
                    });
    }

    void dim5_bound() {
        const struct {
            int v;
            long long bound;
            const char* stem;
        } cases[] = {{8, 10, "p58"}, {9, 12, "p59"}};
        for (const auto& c : cases) {
            add_guarded("dim5.v" + std::to_string(c.v), 11, "sec3-dim5",
                        json{{"bound", c.bound}, {"le_facets", true}}, [&, this](Check& check) {
                            const auto& inst = instance(c.stem, fixture(c.stem));
                            const long long bound = dim5_lower_bound(c.v);
                            const long long facets = static_cast<long long>(inst.fs.facets.size());
                            check.actual = json{{"bound", bound},
                                                {"le_facets", bound <= facets},
                                                {"facets", facets}};
                            check.passed = bound == c.bound && bound <= facets;
                        });
        }
        add_guarded("dim5.growth-band", 11, "sec3-dim5", json{{"within_band", true}},
                    [&](Check& check) {
                        // 0.3 <= bound / v^{4/3} <= 1.5, checked exactly:
                        // 1000 b^3 >= 27 v^4 and 8 b^3 <= 27 v^4.
                        bool ok = true;
                        json first_violation;
                        for (long long v = 20; v <= 200; ++v) {
                            const long long b = dim5_lower_bound(v);
                            const Integer b3 = Integer(b) * b * b;
                            const Integer v4 = Integer(v) * v * v * v;
                            const bool within = 1000 * b3 >= 27 * v4 && 8 * b3 <= 27 * v4;
                            if (!within && ok) {
                                ok = false;
                                first_violation = json{{"v", v}, {"bound", b}};
                            }
                        }
                        check.actual = json{{"within_band", ok}};
                        if (!ok)
                            check.actual["first_violation"] = first_violation;
                        check.passed = ok;
                    });
    }

    void mn_d_plus_4() {
        for (int r = 1; r <= 2; ++r) {
            const int d = 6 + r;
            add_guarded("mn-d4.pyramid-p610.d" + std::to_string(d), 12, "table1",
                        json{{"vertices", d + 4}, {"facets", d + 8}}, [&, this](Check& check) {
                            const auto& inst = instance("pyr" + std::to_string(r) + ".p610",
                                                        pyramid(example(ExampleName::P610), r));
                            check.actual =
                                json{{"vertices", inst.fs.n_vertices},
                                     {"facets", static_cast<long long>(inst.fs.facets.size())}};
                            check.passed = check.actual == check.expected;
                        });
            add_guarded("mn-d4.known.d" + std::to_string(d), 12, "table1",
                        json{{"lower", d + 7}, {"upper", d + 8}}, [&](Check& check) {
                            const KnownBound kb = mn_known(d, d + 4);
                            check.actual = json{{"lower", kb.lower}};
                            if (kb.upper)
                                check.actual["upper"] = *kb.upper;
                            check.passed = check.actual == check.expected;
                        });
        }
    }

    void oracle_equivalence() {
        add_guarded("oracle-equiv.fixtures", 13, "fig1", json{{"all_match", true}},
                    [&, this](Check& check) {
                        bool all = true;
                        for (auto name : kFig1) {
                            const Polytope p = fixture(fig1_stem(name));
                            all &= enumerate_facets(p, Algorithm::oracle, opts_.threads) ==
                                   enumerate_facets(p, Algorithm::incremental);
                        }
                        check.actual = json{{"all_match", all}};
                        check.passed = all;
                    });
        add_guarded("oracle-equiv.random01", 13, "fig1",
                    json{{"instances", 50}, {"agreements", 50}}, [&](Check& check) {
                        std::mt19937 rng(0x2b2b5u);
                        int total = 0, agree = 0;
                        while (total < 50) {
                            const int d = 3 + static_cast<int>(rng() % 3);
                            const int max_v = std::min(10, (1 << d));
                            const int v =
                                d + 2 + static_cast<int>(rng() % static_cast<unsigned>(max_v - d - 1));
                            std::set<Point> sample;
                            for (int tries = 0; static_cast<int>(sample.size()) < v && tries < 200;
                                 ++tries) {
                                Point pt(static_cast<std::size_t>(d));
                                for (auto& x : pt)
                                    x = Rational(static_cast<int>(rng() % 2));
                                sample.insert(std::move(pt));
                            }
                            if (static_cast<int>(sample.size()) < v)
                                continue;
                            auto reduced = reduce_to_vertices(
                                d, std::vector<Point>(sample.begin(), sample.end()));
                            if (!reduced)
                                continue;
                            ++total;
                            agree += enumerate_facets(*reduced, Algorithm::oracle, 1) ==
                                             enumerate_facets(*reduced, Algorithm::incremental)
                                         ? 1
                                         : 0;
                        }
                        check.actual = json{{"instances", total}, {"agreements", agree}};
                        check.passed = check.actual == check.expected;
                    });
    }

    void euler_and_ridges() {
        // Covers every face structure the suite computed above.
        std::vector<std::string> keys;
        for (const auto& [key, inst] : instances_)
            keys.push_back(key);
        for (const auto& key : keys) {
            add_guarded("euler-ridges." + key, 14, "euler", json{{"holds", true}},
                        [&, this](Check& check) {
                            const Instance* inst = nullptr;
                            for (const auto& [k, i] : instances_)
                                if (k == key)
                                    inst = &i;
                            const int d = inst->fstruct.dim;
                            long long alternating = 0;
                            for (int j = 0; j < d; ++j)
                                alternating += (j % 2 == 0 ? 1 : -1) *
                                               inst->fstruct.f_vector[static_cast<std::size_t>(j)];
                            const long long euler_rhs = 1 - (d % 2 == 0 ? 1 : -1);
                            bool ridges_ok = true;
                            if (d >= 2) {
                                for (const auto& ridge :
                                     inst->fstruct.by_dim[static_cast<std::size_t>(d - 2)]) {
                                    int containing = 0;
                                    for (const auto& facet : inst->fs.facets)
                                        containing += std::includes(facet.vertex_indices.begin(),
                                                                    facet.vertex_indices.end(),
                                                                    ridge.begin(), ridge.end())
                                                          ? 1
                                                          : 0;
                                    ridges_ok &= containing == 2;
                                }
                            }
                            const bool euler_ok = alternating == euler_rhs;
                            check.actual = json{{"holds", euler_ok && ridges_ok},
                                                {"euler", euler_ok},
                                                {"ridges_in_two_facets", ridges_ok}};
                            check.passed = euler_ok && ridges_ok;
                        });
        }
    }

    Polytope fixture_or_builtin(ExampleName name) {
        try {
            return fixture(fig1_stem(name));
        } catch (const std::exception&) {
            return example(name);
        }
    }
};

} // namespace detail

/// Runs the full reproduction suite (optionally filtered by id substring)
/// and returns every check with its expected/actual values.
inline VerificationReport run_paper_checks(const Options& opts) {
    return detail::Runner(opts).run();
}

} // namespace polyneigh::verify
