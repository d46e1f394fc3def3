#pragma once

// Seeded random bound quiver algebras for the property suites: connected
// acyclic quivers without multiple arrows, monomial relations of length 2.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tpc/algebra.hpp"
#include "tpc/catalog.hpp"

namespace tpc {

struct RandomSpecOptions {
    std::size_t min_vertices = 2;
    std::size_t max_vertices = 4;
    std::size_t max_arrows = 5;
    int field = 2;
};

/// One draw; the quiver is connected and acyclic, every composable pair of
/// arrows becomes a relation with probability 1/2.
BoundQuiverSpec random_spec(std::mt19937_64& rng, const RandomSpecOptions& options = {});

/// No indecomposable of dimension max_dim + 1. With the no-gaps theorem this
/// certifies that the catalog at max_dim holds every indecomposable.
bool completeness_certificate(const AlgebraPtr& algebra, const CatalogOptions& options);

struct SuiteMember {
    BoundQuiverSpec spec;
    AlgebraPtr algebra;
    IndecompCatalog catalog;
};

struct RandomSuite {
    std::vector<SuiteMember> members;
    std::size_t draws = 0;  // including rejected ones
};

/// Draws until `count` algebras have a certified complete catalog at
/// options.max_dim. Repeated specs and draws whose search exceeds the budget
/// are rejected.
RandomSuite random_suite(std::uint64_t seed, std::size_t count, const CatalogOptions& options,
                         const RandomSpecOptions& spec_options = {}, std::size_t max_draws = 10000);

}  // namespace tpc
