#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tpc/left_part.hpp"

namespace tpc {
namespace {

using testing::fixture;
using testing::subset;
using testing::vertex;

IndecompCatalog catalog_of(const AlgebraPtr& a, std::size_t max_dim)
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

TEST(Hereditary, Fixtures)
{
    EXPECT_TRUE(is_hereditary(fixture("a2")));
    EXPECT_TRUE(is_hereditary(fixture("one_vertex")));
    EXPECT_FALSE(is_hereditary(fixture("e1")));
    EXPECT_FALSE(is_hereditary(fixture("e2")));
    const auto e2 = fixture("e2");
    EXPECT_TRUE(is_hereditary(corner_algebra(e2, subset(e2, {"1", "2"}))));
}

TEST(LeftPart, E1)
{
    const auto a = fixture("e1");
    const auto cat = testing::certified_catalog(a);
    const auto lp = left_part(cat);
    EXPECT_EQ(names(cat, lp.entries), (std::vector<std::string>{"P1=S1", "P2"}));
    EXPECT_TRUE(lp.complete);
    EXPECT_TRUE(lp.abelian_exact.failed());
    EXPECT_EQ(lp.abelian_exact.witness, "coker(P1=S1 -> P2) has summand S2");
    EXPECT_EQ(lp.support, subset(a, {"1", "2"}));

    // Left support: the path algebra of 1 <- 2.
    ASSERT_TRUE(lp.left_support);
    EXPECT_EQ(lp.left_support->dim(), 3U);
    EXPECT_TRUE(is_hereditary(lp.left_support));
    const Quiver q = ext_quiver(*lp.left_support);
    ASSERT_EQ(q.arrows.size(), 1U);
    EXPECT_EQ(lp.left_support->vertex_label(q.arrows[0].source), "2");
    EXPECT_EQ(lp.left_support->vertex_label(q.arrows[0].target), "1");
}

TEST(LeftPart, E1PdValues)
{
    const auto a = fixture("e1");
    const auto cat = testing::certified_catalog(a);
    const auto lp = left_part(cat);
    ASSERT_EQ(lp.pd.size(), cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(lp.pd[i], pd_up_to(cat.entries[i], 8)) << cat.name(i);
        if (cat.projective_of[i]) EXPECT_EQ(lp.pd[i], std::optional<std::size_t>(0));
    }
}

TEST(LeftPart, E2IsModH)
{
    const auto a = fixture("e2");
    const auto cat = testing::certified_catalog(a);
    const auto lp = left_part(cat);
    EXPECT_EQ(names(cat, lp.entries), (std::vector<std::string>{"S2", "P1=S1", "P2"}));
    EXPECT_TRUE(lp.abelian_exact.passed());
    EXPECT_EQ(lp.support, subset(a, {"1", "2"}));
    EXPECT_EQ(lp.entries, annihilated_by_complement(cat, subset(a, {"1", "2"})));
}

TEST(LeftPart, IsPredecessorClosed)
{
    for (const char* name : {"e1", "e2", "e2_modified", "a2"}) {
        const auto a = fixture(name);
        const auto cat = testing::certified_catalog(a);
        EXPECT_TRUE(is_predecessor_closed(cat, left_part(cat).entries).value) << name;
    }
}

TEST(LeftPart, SupportIsValidWhenAbelianExact)
{
    for (const char* name : {"e1", "e2", "e2_modified", "a2"}) {
        const auto a = fixture(name);
        const auto cat = testing::certified_catalog(a);
        const auto lp = left_part(cat);
        if (!lp.abelian_exact.passed()) continue;
        EXPECT_TRUE(sigma_is_valid(a, lp.support).valid) << name;
        const Subcategory c_sigma = annihilated_by_complement(cat, lp.support);
        for (std::size_t x : lp.entries) EXPECT_TRUE(contains(c_sigma, x)) << name << " " << cat.name(x);
    }
}

TEST(LeftSupported, HypothesisNotMetOnE1)
{
    const auto a = fixture("e1");
    const auto cat = testing::certified_catalog(a);
    const auto r = cor32_checks(a, cat, left_part(cat));
    EXPECT_FALSE(r.hypothesis);
    for (const Check* c : {&r.support_hereditary, &r.left_supported, &r.acyclic_hereditary}) {
        EXPECT_EQ(c->verdict, Verdict::NotApplicable);
        EXPECT_EQ(c->witness, "hypothesis not met");
    }
}

TEST(LeftSupported, E2)
{
    const auto a = fixture("e2");
    const auto cat = testing::certified_catalog(a);
    const auto r = cor32_checks(a, cat, left_part(cat));
    EXPECT_TRUE(r.hypothesis);
    EXPECT_TRUE(r.support_hereditary.passed());
    EXPECT_TRUE(r.left_supported.passed());
    EXPECT_EQ(r.acyclic_hereditary.verdict, Verdict::NotApplicable);
}

TEST(LeftSupported, HereditaryAcyclicIsItsOwnLeftSupport)
{
    const auto a = fixture("a2");
    const auto cat = catalog_of(a, 3);
    const auto lp = left_part(cat);
    EXPECT_EQ(lp.entries, cat.all());
    const auto r = cor32_checks(a, cat, lp);
    EXPECT_TRUE(r.hypothesis);
    EXPECT_TRUE(r.support_hereditary.passed());
    EXPECT_TRUE(r.left_supported.passed());
    EXPECT_TRUE(r.acyclic_hereditary.passed());
}

TEST(LocalExtension, Detection)
{
    const auto e2 = fixture("e2");
    const auto shape = detect_local_extension(e2);
    ASSERT_TRUE(shape.has_value());
    EXPECT_EQ(e2->vertex_label(shape->y), "3");
    EXPECT_EQ(shape->r_dim, 2U);
    EXPECT_EQ(shape->h_vertices, subset(e2, {"1", "2"}));
    EXPECT_TRUE(shape->h_hereditary);
    EXPECT_EQ(shape->m_h.dim_vector(), (std::vector<std::size_t>{1, 2}));

    EXPECT_FALSE(detect_local_extension(fixture("e1")).has_value());
    EXPECT_FALSE(detect_local_extension(fixture("a2")).has_value());
    EXPECT_FALSE(detect_local_extension(fixture("one_vertex")).has_value());
}

TEST(LocalExtension, LeftSupportIsH)
{
    for (const char* name : {"e2", "e2_modified"}) {
        const auto a = fixture(name);
        const auto shape = detect_local_extension(a);
        ASSERT_TRUE(shape.has_value()) << name;
        EXPECT_EQ(left_part(testing::certified_catalog(a)).support, shape->h_vertices) << name;
    }
}

TEST(LocalExtensionCriterion, E2AllTrue)
{
    const auto a = fixture("e2");
    const auto r = prop35_check(a, testing::certified_catalog(a));
    EXPECT_TRUE(r.abelian_exact.passed());
    EXPECT_TRUE(r.equals_ind_h.passed());
    EXPECT_TRUE(r.m_h_injective.passed());
    EXPECT_TRUE(r.agree);
}

TEST(LocalExtensionCriterion, ModifiedFixtureAgrees)
{
    const auto a = fixture("e2_modified");
    const auto r = prop35_check(a, testing::certified_catalog(a));
    EXPECT_TRUE(r.agree) << to_string(r.abelian_exact.verdict) << to_string(r.equals_ind_h.verdict)
                         << to_string(r.m_h_injective.verdict);
}

TEST(LocalExtensionCriterion, RefusesWithoutShape)
{
    const auto a = fixture("e1");
    const auto cat = catalog_of(a, 3);
    try {
        prop35_check(a, cat);
        FAIL() << "expected std::invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "not a local extension");
    }
}

}  // namespace
}  // namespace tpc
