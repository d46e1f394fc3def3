#pragma once

// The left part L_A, the left support and the local-extension criterion.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpc/algebra.hpp"
#include "tpc/catalog.hpp"
#include "tpc/classifier.hpp"
#include "tpc/module.hpp"

namespace tpc {

struct LeftPartReport {
    Subcategory entries;                           // L_A
    std::vector<std::optional<std::size_t>> pd;    // per catalog entry, unset above the cap
    VertexSubset support;                          // vertices of the projectives in L_A
    AlgebraPtr left_support;                       // null when L_A has no projective
    Prop23Result conditions;
    Check abelian_exact;
    bool complete = false;
};

/// X is in L_A when every predecessor Y of X has a projective first syzygy.
LeftPartReport left_part(const IndecompCatalog& catalog, const Prop23Options& options = {});

/// Corner algebra at the support of L_A.
AlgebraPtr left_support(const AlgebraPtr& algebra, const LeftPartReport& report);

/// J(A) is projective as a right module.
bool is_hereditary(const AlgebraPtr& algebra);

struct Cor32Result {
    bool hypothesis = false;  // add(L_A) abelian exact
    Check support_hereditary;
    Check left_supported;
    Check acyclic_hereditary;
};

Cor32Result cor32_checks(const AlgebraPtr& algebra, const IndecompCatalog& catalog, const LeftPartReport& report);

struct LocalExtensionShape {
    VertexSubset h_vertices;
    std::size_t y = 0;
    std::size_t r_dim = 0;  // dim e_y A e_y
    bool h_hereditary = false;
    RightModule m_h;        // e_y A e_H over H
};

std::optional<LocalExtensionShape> detect_local_extension(const AlgebraPtr& algebra);

struct Prop35Result {
    Check abelian_exact;   // (1)
    Check equals_ind_h;    // (2)
    Check m_h_injective;   // (3)
    bool agree = false;
};

/// Throws std::invalid_argument("not a local extension") when the shape is absent.
Prop35Result prop35_check(const AlgebraPtr& algebra, const IndecompCatalog& catalog, const Prop23Options& options = {});

}  // namespace tpc
