#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tpc/classifier.hpp"
#include "tpc/random_algebra.hpp"

namespace tpc {
namespace {

using testing::fixture;

TEST(RandomSpec, ShapeConstraints)
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const BoundQuiverSpec spec = random_spec(rng);
        const Quiver& q = spec.quiver;
        EXPECT_GE(q.vertex_count(), 2U);
        EXPECT_LE(q.vertex_count(), 4U);
        EXPECT_LE(q.arrows.size(), 5U);
        EXPECT_TRUE(is_connected(q));
        EXPECT_FALSE(has_oriented_cycle(q));
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            for (std::size_t b = a + 1; b < q.arrows.size(); ++b) {
                EXPECT_FALSE(q.arrows[a].source == q.arrows[b].source && q.arrows[a].target == q.arrows[b].target);
            }
        }
        for (const Relation& r : spec.relations) {
            ASSERT_EQ(r.terms.size(), 1U);
            ASSERT_EQ(r.terms[0].path.size(), 2U);
            EXPECT_EQ(q.arrows[r.terms[0].path[0]].target, q.arrows[r.terms[0].path[1]].source);
        }
        EXPECT_NO_THROW(build_algebra(spec));
    }
}

TEST(RandomSpec, SeedIsReproducible)
{
    std::mt19937_64 a(7);
    std::mt19937_64 b(7);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(format_spec(random_spec(a)), format_spec(random_spec(b)));
}

TEST(Certificate, Fixtures)
{
    CatalogOptions options;
    options.max_dim = 4;
    EXPECT_TRUE(completeness_certificate(fixture("e1"), options));
    options.max_dim = 3;
    EXPECT_TRUE(completeness_certificate(fixture("a2"), options));
    EXPECT_FALSE(completeness_certificate(fixture("e2"), options));
}

TEST(Certificate, CertifiedBounds)
{
    EXPECT_EQ(testing::certified_max_dim(fixture("a2")), 2u);
    EXPECT_EQ(testing::certified_max_dim(fixture("one_vertex")), 1u);
    EXPECT_EQ(testing::certified_max_dim(fixture("e1")), 4u);
    EXPECT_EQ(testing::certified_max_dim(fixture("e2")), 5u);
    EXPECT_EQ(testing::certified_max_dim(fixture("e2_modified")), 4u);
}

TEST(RandomSuite, SmallSuiteSatisfiesTheClassification)
{
    CatalogOptions options;
    options.max_dim = 4;
    const RandomSuite suite = random_suite(3, 6, options);
    ASSERT_EQ(suite.members.size(), 6U);
    for (const SuiteMember& m : suite.members) {
        EXPECT_TRUE(m.catalog.complete);
        const auto classification = classify_all_sigma(m.algebra);
        const auto cc = theorem_crosscheck(m.algebra, m.catalog, classification);
        EXPECT_TRUE(cc.check.passed()) << format_spec(m.spec) << cc.check.witness;
        for (const auto& sigma : classification.valid()) {
            EXPECT_TRUE(splitness_check(sigma, m.catalog).overall.passed()) << format_spec(m.spec);
            EXPECT_TRUE(arrow_source_check(m.algebra, sigma).passed()) << format_spec(m.spec);
        }
    }
}

TEST(RandomSuite, SameSeedSameSuite)
{
    CatalogOptions options;
    options.max_dim = 3;
    const RandomSuite a = random_suite(11, 4, options);
    const RandomSuite b = random_suite(11, 4, options);
    ASSERT_EQ(a.members.size(), b.members.size());
    EXPECT_EQ(a.draws, b.draws);
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        EXPECT_EQ(format_spec(a.members[i].spec), format_spec(b.members[i].spec));
        EXPECT_EQ(a.members[i].catalog.size(), b.members[i].catalog.size());
    }
}

}  // namespace
}  // namespace tpc
