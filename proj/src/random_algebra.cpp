#include "tpc/random_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "tpc/spec_format.hpp"

namespace tpc {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

}  // namespace

BoundQuiverSpec random_spec(std::mt19937_64& rng, const RandomSpecOptions& options)
{
    while (true) {
        BoundQuiverSpec spec;
        spec.field = Field(options.field);
        const std::size_t n = draw(rng, options.min_vertices, options.max_vertices);
        for (std::size_t v = 0; v < n; ++v) spec.quiver.vertices.push_back(std::to_string(v + 1));

        // Arrows follow a random topological order, so the quiver is acyclic.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(order[i], order[j]);
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        const std::size_t lo = n - 1;
        const std::size_t hi = std::min(options.max_arrows, pairs.size());
        if (lo > hi) continue;
        const std::size_t m = draw(rng, lo, hi);
        pairs.resize(m);
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t k = 0; k < m; ++k) {
            spec.quiver.arrows.push_back({std::string(1, static_cast<char>('a' + k)), pairs[k].first, pairs[k].second});
        }
        if (!is_connected(spec.quiver)) continue;

        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                if (spec.quiver.arrows[a].target != spec.quiver.arrows[b].source) continue;
                if (rng() % 2 == 0) spec.relations.push_back(Relation{{RelationTerm{1, {a, b}}}});
            }
        }
        return spec;
    }
}

bool completeness_certificate(const AlgebraPtr& algebra, const CatalogOptions& options)
{
    return indecomposables_of_dimension(algebra, options.max_dim + 1, options).empty();
}

RandomSuite random_suite(std::uint64_t seed, std::size_t count, const CatalogOptions& options,
                         const RandomSpecOptions& spec_options, std::size_t max_draws)
{
    RandomSuite suite;
    std::mt19937_64 rng(seed);
    std::set<std::string> seen;
    while (suite.members.size() < count && suite.draws < max_draws) {
        ++suite.draws;
        BoundQuiverSpec spec = random_spec(rng, spec_options);
        if (!seen.insert(format_spec(spec)).second) continue;
        AlgebraPtr algebra = build_algebra(spec);
        try {
            if (!completeness_certificate(algebra, options)) continue;
            CatalogOptions complete = options;
            complete.assume_complete = true;
            IndecompCatalog catalog = enumerate_catalog(algebra, complete);
            suite.members.push_back({std::move(spec), std::move(algebra), std::move(catalog)});
        } catch (const SearchBudgetExceeded&) {
            continue;
        }
    }
    return suite;
}

}  // namespace tpc
