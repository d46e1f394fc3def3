// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sigma_oracle.hpp"
#include "test_support.hpp"
#include "tpc/classifier.hpp"
#include "tpc/left_part.hpp"
#include "tpc/random_algebra.hpp"

namespace {

using namespace tpc;
using tpc::testing::fixture;
using tpc::testing::subset;
using tpc::testing::vertex;

constexpr double kFixtureSeconds = 10.0;
constexpr double kSuiteSeconds = 300.0;
constexpr std::uint64_t kSuiteSeed = 1;
constexpr std::size_t kSuiteSize = 20;
constexpr std::size_t kMaxDim = 4;
constexpr std::size_t kPdCap = 8;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Clock {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

IndecompCatalog complete_catalog(const AlgebraPtr& a, std::size_t max_dim)
{
    CatalogOptions options;
    options.max_dim = max_dim;
    options.assume_complete = true;
    return enumerate_catalog(a, options);
}

std::vector<std::string> names(const IndecompCatalog& cat, const Subcategory& c)
{
    std::vector<std::string> out;
    for (std::size_t i : c) out.push_back(cat.name(i));
    return out;
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

struct Member {
    std::string label;
    AlgebraPtr algebra;
    IndecompCatalog catalog;
};

/// The random suite plus E1 and E2, built once.
struct SuiteData {
    std::vector<Member> random;
    std::vector<Member> all;
    std::size_t draws = 0;
    double build_seconds = 0;
};

const SuiteData& suite_data()
{
    static const SuiteData data = [] {
        SuiteData d;
        Clock clock;
        CatalogOptions options;
        options.max_dim = kMaxDim;
        RandomSuite suite = random_suite(kSuiteSeed, kSuiteSize, options);
        d.draws = suite.draws;
        for (std::size_t i = 0; i < suite.members.size(); ++i) {
            d.random.push_back({"random #" + std::to_string(i), suite.members[i].algebra, suite.members[i].catalog});
        }
        d.build_seconds = clock.seconds();
        d.all = d.random;
        for (const char* name : {"e1", "e2"}) {
            const auto a = fixture(name);
            d.all.push_back({name, a, testing::certified_catalog(a)});
        }
        return d;
    }();
    return data;
}

Outcome e1_left_part()
{
    Clock clock;
    const auto a = fixture("e1");
    const auto cat = testing::certified_catalog(a);
    const auto lp = left_part(cat);
    Outcome o;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok && o.pass) {
            o.pass = false;
            o.detail = what;
        }
    };
    need(names(cat, lp.entries) == std::vector<std::string>{"P1=S1", "P2"}, "L_A = " + describe(cat, lp.entries));
    need(lp.left_support != nullptr, "no left support");
    if (lp.left_support) {
        const Quiver q = ext_quiver(*lp.left_support);
        need(lp.left_support->dim() == 3 && is_hereditary(lp.left_support) && q.arrows.size() == 1 &&
                 lp.left_support->vertex_label(q.arrows[0].source) == "2" &&
                 lp.left_support->vertex_label(q.arrows[0].target) == "1",
             "left support is not the path algebra of 1 <- 2");
    }
    need(lp.abelian_exact.failed(), "abelian exact is " + to_string(lp.abelian_exact.verdict));
    need(lp.abelian_exact.witness == "coker(P1=S1 -> P2) has summand S2", "witness " + lp.abelian_exact.witness);
    const double t = clock.seconds();
    need(t < kFixtureSeconds, "runtime " + fmt_seconds(t));
    if (o.pass) o.detail = "L_A = {P1=S1, P2}, left support 2->1, not abelian exact (cokernel S2), " + fmt_seconds(t);
    return o;
}

Outcome e2_final_example()
{
    Clock clock;
    const auto a = fixture("e2");
    const auto sigma = subset(a, {"1", "2"});
    Outcome o;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok && o.pass) {
            o.pass = false;
            o.detail = what;
        }
    };
    const SigmaRecord r = sigma_is_valid(a, sigma);
    need(r.valid, "{1,2} not valid");
    need(r.m_injective == std::optional<bool>(true), "M not injective");
    need(r.m_hereditary_injective == std::optional<bool>(true), "M not hereditary-injective");
    const RightModule m = off_corner_bimodule(a, sigma);
    const AlgebraPtr h = m.algebra();
    const std::size_t h2 = vertex(h, "2");
    need(is_iso(m, direct_sum(projective(h, h2), simple(h, h2))), "M is not P2 + S2");

    const auto cat = testing::certified_catalog(a);
    const auto lp = left_part(cat);
    need(lp.entries.size() == 3 && lp.entries == annihilated_by_complement(cat, sigma),
         "L_A = " + describe(cat, lp.entries));
    need(lp.abelian_exact.passed(), "L_A not abelian exact: " + lp.abelian_exact.witness);
    const Prop35Result p = prop35_check(a, cat);
    need(p.abelian_exact.passed() && p.equals_ind_h.passed() && p.m_h_injective.passed(),
         "local-extension clauses not all true");
    const double t = clock.seconds();
    need(t < kFixtureSeconds, "runtime " + fmt_seconds(t));
    if (o.pass) o.detail = "M = P2 + S2 injective, L_A = ind_H (3 entries) abelian exact, three clauses true, " + fmt_seconds(t);
    return o;
}

Outcome classification_ground_truth()
{
    Outcome o;
    const std::vector<std::pair<std::string, std::vector<std::string>>> expected = {
        {"e1", {"{}", "{1}", "{1,2,3}"}}, {"e2", {"{}", "{1}", "{1,2}", "{1,2,3}"}}};
    for (const auto& [name, want] : expected) {
        const auto a = fixture(name);
        const auto valid = classify_all_sigma(a).valid();
        std::vector<std::string> got;
        for (const auto& s : valid) got.push_back(subset_string(*a, s));
        if (got != want) {
            o = {false, name + ": classifier disagrees with the expected list"};
            return o;
        }
        if (oracle::valid_set(a) != valid) {
            o = {false, name + ": classifier disagrees with the brute-force oracle"};
            return o;
        }
    }
    o.detail = "E1 {} {1} {1,2,3}; E2 {} {1} {1,2} {1,2,3}; brute-force oracle agrees";
    return o;
}

Outcome equivalence_suite()
{
    Clock clock;
    const SuiteData& d = suite_data();
    std::size_t subcategories = 0;
    std::size_t inconclusive = 0;
    std::size_t disagreements = 0;
    std::string first;
    for (const Member& m : d.random) {
        for (std::size_t t = 0; t < m.catalog.size(); ++t) {
            const Subcategory c = predecessors_of(m.catalog, {t});
            const Prop23Result r = prop23_conditions(m.catalog, c);
            ++subcategories;
            std::optional<Verdict> seen;
            for (std::size_t k = 1; k < 6; ++k) {
                const Verdict v = r.conditions[k].verdict;
                if (v == Verdict::Inconclusive) {
                    ++inconclusive;
                    continue;
                }
                if (!seen) {
                    seen = v;
                } else if (*seen != v) {
                    ++disagreements;
                    if (first.empty()) first = m.label + " " + describe(m.catalog, c);
                    break;
                }
            }
        }
    }
    const double t = clock.seconds() + d.build_seconds;
    Outcome o;
    o.pass = d.random.size() >= kSuiteSize && disagreements == 0 && t < kSuiteSeconds;
    o.detail = std::to_string(d.random.size()) + " algebras (" + std::to_string(d.draws) + " draws), " +
               std::to_string(subcategories) + " down-closures, " + std::to_string(disagreements) +
               " disagreements, " + std::to_string(inconclusive) + " inconclusive, " + fmt_seconds(t);
    if (!first.empty()) o.detail += "; first: " + first;
    return o;
}

Outcome bijection()
{
    std::size_t pairs = 0;
    for (const Member& m : suite_data().all) {
        const auto r = theorem_crosscheck(m.algebra, m.catalog, classify_all_sigma(m.algebra));
        if (!r.check.passed()) return {false, m.label + ": " + r.check.witness};
        pairs += r.pairs.size();
    }
    return {true, std::to_string(suite_data().all.size()) + " algebras, " + std::to_string(pairs) + " matched pairs"};
}

Outcome split_and_arrows()
{
    std::size_t sigmas = 0;
    for (const Member& m : suite_data().all) {
        for (const auto& sigma : classify_all_sigma(m.algebra).valid()) {
            ++sigmas;
            const std::string tag = m.label + " " + subset_string(*m.algebra, sigma);
            const TorsionPairReport r = splitness_check(sigma, m.catalog);
            if (!r.overall.passed()) return {false, tag + ": " + r.overall.witness};
            for (std::size_t i = 0; i < m.catalog.size(); ++i) {
                if (r.entries[i].torsion == r.entries[i].torsion_free || !r.entries[i].splits) {
                    return {false, tag + ": " + r.entries[i].module};
                }
            }
            const Check arrows = arrow_source_check(m.algebra, sigma);
            if (!arrows.passed()) return {false, tag + ": " + arrows.witness};
        }
    }
    return {true, std::to_string(sigmas) + " valid sigma, every entry torsion or torsion-free and split, arrows end at sources"};
}

Outcome gldim_equality()
{
    const auto e2 = fixture("e2");
    const auto cat = testing::certified_catalog(e2);
    const GlDimResult g = gldim_equality_check(e2, subset(e2, {"1", "2"}), cat, kPdCap);
    if (!(g.check.passed() && g.corner_gldim == std::optional<std::size_t>(1) && g.sup_pd == std::optional<std::size_t>(1))) {
        return {false, "E2 {1,2}: " + g.check.witness};
    }
    std::size_t conclusive = 0;
    std::size_t skipped = 0;
    for (const Member& m : suite_data().random) {
        for (const auto& sigma : classify_all_sigma(m.algebra).valid()) {
            const GlDimResult r = gldim_equality_check(m.algebra, sigma, m.catalog, kPdCap);
            if (r.check.failed()) return {false, m.label + " " + subset_string(*m.algebra, sigma) + ": " + r.check.witness};
            if (r.check.passed()) {
                ++conclusive;
            } else {
                ++skipped;
            }
        }
    }
    return {true, "E2 {1,2}: 1 = 1; random suite " + std::to_string(conclusive) + " equal, " + std::to_string(skipped) +
                      " empty or above the cap"};
}

Outcome invariants()
{
    std::mt19937_64 rng(5);
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 50; ++i) {
            const std::size_t rows = 1 + rng() % 6;
            const std::size_t cols = 1 + rng() % 6;
            const Matrix m = tpc::testing::random_matrix(rng, rows, cols, Field(p));
            if (rank(m) + nullspace_basis(m).size() != cols) return {false, "rank + nullity over GF(" + std::to_string(p) + ")"};
        }
    }
    std::size_t modules = 0;
    for (const char* name : {"one_vertex", "a2", "e1", "e2", "e2_modified"}) {
        const auto a = fixture(name);
        const std::string tag = name;
        std::size_t blocks = 0;
        for (std::size_t x = 0; x < a->vertex_count(); ++x) {
            for (std::size_t y = 0; y < a->vertex_count(); ++y) blocks += a->block(x, y).size();
        }
        if (blocks != a->dim()) return {false, tag + ": Peirce blocks do not add up"};
        const auto cat = complete_catalog(a, 3);
        for (const RightModule& m : cat.entries) {
            ++modules;
            for (std::size_t x = 0; x < a->vertex_count(); ++x) {
                const RightModule p = projective(a, x);
                if (hom_dim(p, m) != m.dim_vector()[x]) return {false, tag + ": Hom(P_x, M) != dim M e_x"};
                if (ext1_dim(p, m) != 0) return {false, tag + ": Ext^1(P_x, M) != 0"};
            }
        }
        for (std::size_t x = 0; x < a->vertex_count(); ++x) {
            if (!is_injective(injective(a, x))) return {false, tag + ": I_" + a->vertex_label(x) + " not injective"};
        }
    }
    return {true, "rank/nullity, Peirce blocks, Hom(P_x, -), Ext^1(P_x, -), injectivity of I_x on 5 fixtures (" +
                      std::to_string(modules) + " modules)"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"E1 left part", e1_left_part},
        {"E2 local extension", e2_final_example},
        {"classification ground truth", classification_ground_truth},
        {"abelian-exact equivalence suite", equivalence_suite},
        {"classification bijection", bijection},
        {"split pairs and arrow sources", split_and_arrows},
        {"gl.dim equality", gldim_equality},
        {"invariant micro-suite", invariants},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
