#pragma once

// Split torsion pairs whose torsion-free class is closed under quotients:
// the structural test on vertex subsets and the catalog-based oracles it is
// checked against.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpc/algebra.hpp"
#include "tpc/catalog.hpp"
#include "tpc/module.hpp"

namespace tpc {

enum class Verdict { True, False, Inconclusive, NotApplicable };

std::string to_string(Verdict v);

struct Check {
    Verdict verdict = Verdict::True;
    std::string witness;  // empty unless the verdict is False or Inconclusive

    bool passed() const { return verdict == Verdict::True; }
    bool failed() const { return verdict == Verdict::False; }
    static Check ok() { return {}; }
    static Check fail(std::string why) { return {Verdict::False, std::move(why)}; }
    static Check inconclusive(std::string why) { return {Verdict::Inconclusive, std::move(why)}; }
    static Check not_applicable(std::string why) { return {Verdict::NotApplicable, std::move(why)}; }
};

/// Modules killed by 1 - e_sigma: entries supported inside sigma.
Subcategory annihilated_by_complement(const IndecompCatalog& catalog, const VertexSubset& sigma);

// ------------------------------------------------------- catalog oracles

struct Lemma21Result {
    Check predecessor_closed;  // (1)
    Check hom_vanishing;       // (2) X outside C or Hom(X, C) = 0
    Check split_torsion_free;  // (3) via the torsion radical of the class left-orthogonal to C
};

Lemma21Result lemma21_check(const IndecompCatalog& catalog, const Subcategory& c);

struct Prop23Options {
    /// Largest total dimension of the sums of two entries used by (1)-(3);
    /// zero means the catalog bound.
    std::size_t sum_dim_bound = 0;
    Limits limits;
};

/// conditions[k] holds condition (k + 1): (1) kernel and cokernel closure,
/// (2) cokernel closure, (3) quotient closure, (4) tops of projectives,
/// (5) composition factors, (6) add(C) = Gen(P_C).
struct Prop23Result {
    std::array<Check, 6> conditions;

    /// Overall verdict of "add(C) is abelian exact": condition (1) when
    /// conclusive, otherwise the exact condition (5).
    Check abelian_exact() const;
};

Prop23Result prop23_conditions(const IndecompCatalog& catalog, const Subcategory& c, const Prop23Options& options = {});

// ----------------------------------------------------- structural test

struct SigmaRecord {
    VertexSubset sigma;
    std::size_t forbidden_corner_dim = 0;
    std::vector<std::size_t> m_dim_vector;  // over the corner, one entry per member of sigma
    std::optional<bool> m_injective;         // unset when M could not be examined
    std::optional<bool> m_hereditary_injective;
    std::optional<RightModule> m_witness;    // non-injective quotient of M
    bool valid = false;

    // Filled in for valid sigma only.
    std::optional<Quiver> corner_quiver;
    std::optional<std::size_t> corner_gldim;  // unset when above the pd cap
    Check arrow_sources;
};

SigmaRecord sigma_is_valid(const AlgebraPtr& algebra, const VertexSubset& sigma, const Limits& limits = {});

struct ClassificationReport {
    std::vector<SigmaRecord> records;  // every subset, mask ascending
    std::vector<std::string> warnings;

    std::vector<VertexSubset> valid() const;
};

ClassificationReport classify_all_sigma(const AlgebraPtr& algebra, const Limits& limits = {});

// ---------------------------------------------------- torsion radical

/// t(X) = X (1 - e_sigma) A.
Submodule torsion_radical(const VertexSubset& sigma, const RightModule& x);

struct TorsionEntry {
    std::string module;
    bool torsion = false;       // t(X) = X
    bool torsion_free = false;  // t(X) = 0
    std::size_t t_dim = 0;
    bool splits = false;
};

struct TorsionPairReport {
    std::vector<TorsionEntry> entries;  // catalog entries, then sums of two
    Check overall;
};

TorsionPairReport splitness_check(const VertexSubset& sigma, const IndecompCatalog& catalog,
                                  std::size_t sum_dim_bound = 0);

/// gl.dim of the corner at sigma against the sup of pd over C_sigma.
struct GlDimResult {
    std::optional<std::size_t> corner_gldim;
    std::optional<std::size_t> sup_pd;
    Check check;
};

GlDimResult gldim_equality_check(const AlgebraPtr& algebra, const VertexSubset& sigma, const IndecompCatalog& catalog,
                                 std::size_t pd_cap);

/// Every arrow y -> x of the quiver with y outside sigma and x in sigma ends
/// at a source of the corner quiver.
Check arrow_source_check(const AlgebraPtr& algebra, const VertexSubset& sigma);

struct CrosscheckResult {
    Check check;
    /// (sigma, C_sigma) for every valid sigma.
    std::vector<std::pair<VertexSubset, Subcategory>> pairs;
    /// Predecessor-closed subcategories closed under composition factors.
    std::vector<Subcategory> abelian_closed;
    std::size_t closed_count = 0;  // all predecessor-closed subcategories seen
};

struct CrosscheckOptions {
    Prop23Options prop23;
    std::size_t downset_cap = std::size_t{1} << 16;
};

CrosscheckResult theorem_crosscheck(const AlgebraPtr& algebra, const IndecompCatalog& catalog,
                                    const ClassificationReport& classification, const CrosscheckOptions& options = {});

/// Linear check that the trace of `p` in `x` is a right approximation by
/// add(C): every map from an entry of C into x has its image inside it.
Check trace_is_right_approximation(const IndecompCatalog& catalog, const Subcategory& c, const RightModule& p,
                                   const RightModule& x);

std::string subset_string(const Algebra& algebra, const VertexSubset& sigma);

}  // namespace tpc
