#include "tpc/left_part.hpp"

#include <stdexcept>

namespace tpc {

LeftPartReport left_part(const IndecompCatalog& catalog, const Prop23Options& options)
{
    LeftPartReport out;
    out.complete = catalog.complete;
    const std::size_t n = catalog.size();
    std::vector<bool> pd_at_most_one(n);
    out.pd.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        pd_at_most_one[i] = is_projective(syzygy(catalog.entries[i]).module);
        out.pd[i] = pd_up_to(catalog.entries[i], options.limits.pd_cap);
    }
    for (std::size_t x = 0; x < n; ++x) {
        bool member = true;
        for (std::size_t y = 0; y < n && member; ++y) member = !catalog.reach[y][x] || pd_at_most_one[y];
        if (member) out.entries.push_back(x);
    }
    out.support = supporting_projective(catalog, out.entries).vertices;
    if (!out.support.empty()) out.left_support = corner_algebra(catalog.algebra, out.support);
    out.conditions = prop23_conditions(catalog, out.entries, options);
    out.abelian_exact = out.conditions.abelian_exact();
    return out;
}

AlgebraPtr left_support(const AlgebraPtr& algebra, const LeftPartReport& report)
{
    if (report.support.empty()) return nullptr;
    return corner_algebra(algebra, report.support);
}

bool is_hereditary(const AlgebraPtr& algebra)
{
    return is_projective(radical_of_module(regular(algebra)).module);
}

Cor32Result cor32_checks(const AlgebraPtr& algebra, const IndecompCatalog& catalog, const LeftPartReport& report)
{
    Cor32Result out;
    out.hypothesis = report.abelian_exact.passed();
    if (!out.hypothesis) {
        const Check skip = Check::not_applicable("hypothesis not met");
        out.support_hereditary = out.left_supported = out.acyclic_hereditary = skip;
        return out;
    }
    const AlgebraPtr support = left_support(algebra, report);
    if (support && !is_hereditary(support)) out.support_hereditary = Check::fail("left support is not hereditary");

    const RightModule p = supporting_projective(catalog, report.entries).module;
    for (std::size_t x = 0; x < catalog.size() && out.left_supported.passed(); ++x) {
        out.left_supported = trace_is_right_approximation(catalog, report.entries, p, catalog.entries[x]);
    }

    if (has_oriented_cycle(ext_quiver(*algebra))) {
        out.acyclic_hereditary = Check::not_applicable("quiver has an oriented cycle");
    } else if (!is_hereditary(algebra)) {
        out.acyclic_hereditary = Check::fail("acyclic but not hereditary");
    } else if (!report.support.is_all()) {
        out.acyclic_hereditary = Check::fail("left support misses vertices");
    }
    return out;
}

std::optional<LocalExtensionShape> detect_local_extension(const AlgebraPtr& algebra)
{
    const std::size_t n = algebra->vertex_count();
    if (n < 2) return std::nullopt;
    std::optional<LocalExtensionShape> found;
    std::size_t count = 0;
    for (std::size_t y = 0; y < n; ++y) {
        const VertexSubset h = VertexSubset::from_members(n, {y}).complement();
        const std::size_t r_dim = algebra->block(y, y).size();
        if (r_dim <= 1 || forbidden_corner_dim(*algebra, h) != 0) continue;
        if (!is_hereditary(corner_algebra(algebra, h))) continue;
        ++count;
        found = LocalExtensionShape{h, y, r_dim, true, off_corner_bimodule(algebra, h)};
    }
    if (count != 1) return std::nullopt;
    return found;
}

Prop35Result prop35_check(const AlgebraPtr& algebra, const IndecompCatalog& catalog, const Prop23Options& options)
{
    const auto shape = detect_local_extension(algebra);
    if (!shape) throw std::invalid_argument("not a local extension");
    Prop35Result out;
    const LeftPartReport lp = left_part(catalog, options);
    out.abelian_exact = lp.abelian_exact;
    const Subcategory ind_h = annihilated_by_complement(catalog, shape->h_vertices);
    if (lp.entries != ind_h) {
        out.equals_ind_h = Check::fail("L_A = " + describe(catalog, lp.entries) + " but ind_H = " + describe(catalog, ind_h));
    }
    if (!is_injective(shape->m_h)) out.m_h_injective = Check::fail("M_H " + dim_vector_string(shape->m_h) + " is not injective");
    out.agree = out.abelian_exact.verdict == out.equals_ind_h.verdict &&
                out.equals_ind_h.verdict == out.m_h_injective.verdict;
    return out;
}

}  // namespace tpc
