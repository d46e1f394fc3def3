#pragma once

// Brute-force catalog of indecomposable modules up to a total dimension,
// with the hom-nonzero digraph and its predecessor closure.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpc/algebra.hpp"
#include "tpc/module.hpp"

namespace tpc {

/// A linear combination of words in the radical generators.
struct GeneratorWordSum {
    std::vector<std::pair<Scalar, std::vector<std::size_t>>> terms;
};

/// A presentation of an arbitrary algebra by its radical generators: every
/// basis element is written as a combination of generator words, and the
/// relations span the kernel of words of length >= 2 in each Peirce block.
/// Corner algebras have no stored presentation, so this is derived on demand.
struct GeneratorPresentation {
    AlgebraPtr algebra;
    std::vector<std::size_t> generators;           // basis indices of radical generators
    std::vector<GeneratorWordSum> expressions;     // one per basis element
    std::vector<GeneratorWordSum> relations;
};

GeneratorPresentation generator_presentation(const AlgebraPtr& algebra);

/// The module with the given generator matrices (dim_vector[s] x dim_vector[t]
/// per generator). The relations are not checked here.
RightModule module_from_generators(const GeneratorPresentation& presentation, const std::vector<std::size_t>& dim_vector,
                                   const std::vector<Matrix>& matrices);

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogOptions {
    std::size_t max_dim = 4;
    bool assume_complete = false;
    /// Largest number of matrix assignments examined per dimension vector.
    std::size_t search_budget = std::size_t{1} << 22;
    Limits limits;
};

/// Indices into a catalog, sorted ascending.
using Subcategory = std::vector<std::size_t>;

struct IndecompCatalog {
    AlgebraPtr algebra;
    std::size_t max_dim = 0;
    bool complete = false;  // asserted by the caller, never inferred
    std::vector<RightModule> entries;
    std::vector<std::vector<std::size_t>> hom_dims;  // dim Hom(entry i, entry j)
    std::vector<std::vector<bool>> reach;            // reach[i][j]: i is a predecessor of j
    std::vector<std::optional<std::size_t>> projective_of;  // vertex x when entry is P_x
    std::vector<std::optional<std::size_t>> simple_of;
    std::vector<std::optional<std::size_t>> injective_of;

    std::size_t size() const { return entries.size(); }
    /// Index of the entry isomorphic to an indecomposable module, if present.
    std::optional<std::size_t> find(const RightModule& indecomposable) const;
    std::optional<std::size_t> projective_entry(std::size_t vertex) const;
    std::optional<std::size_t> simple_entry(std::size_t vertex) const;
    /// Roles joined by '=', such as "P1=S1" or "I3", otherwise "X7(1,2,0)".
    std::string name(std::size_t entry) const;
    Subcategory all() const;
};

/// Indecomposables of one total dimension, canonically ordered.
std::vector<RightModule> indecomposables_of_dimension(const AlgebraPtr& algebra, std::size_t total,
                                                      const CatalogOptions& options = {});

IndecompCatalog enumerate_catalog(const AlgebraPtr& algebra, const CatalogOptions& options = {});

/// Every entry that is a predecessor of some target.
Subcategory predecessors_of(const IndecompCatalog& catalog, const Subcategory& targets);

struct ClosureResult {
    bool value = true;
    /// (X, Y) with X outside C, Y in C and Hom(X, Y) != 0.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ClosureResult is_predecessor_closed(const IndecompCatalog& catalog, const Subcategory& c);

bool contains(const Subcategory& c, std::size_t entry);
Subcategory complement(const IndecompCatalog& catalog, const Subcategory& c);

struct SupportingProjective {
    VertexSubset vertices;
    RightModule module;
};

/// The supporting projective of a predecessor-closed C. A vertex x belongs
/// to it when P_x is in C; when P_x lies beyond a truncated catalog, x is
/// included when it appears in the support of some member of C.
SupportingProjective supporting_projective(const IndecompCatalog& catalog, const Subcategory& c);

std::string describe(const IndecompCatalog& catalog, const Subcategory& c);

}  // namespace tpc
