#include "tpc/classifier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tpc {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "n/a";
    }
    return "?";
}

std::string subset_string(const Algebra& algebra, const VertexSubset& sigma)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t v : sigma.members()) {
        out += (first ? "" : ",") + algebra.vertex_label(v);
        first = false;
    }
    return out + "}";
}

Subcategory annihilated_by_complement(const IndecompCatalog& catalog, const VertexSubset& sigma)
{
    Subcategory out;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& dv = catalog.entries[i].dim_vector();
        bool inside = true;
        for (std::size_t v = 0; v < dv.size(); ++v) inside = inside && (dv[v] == 0 || sigma.contains(v));
        if (inside) out.push_back(i);
    }
    return out;
}

// ------------------------------------------------- split torsion-free class

Lemma21Result lemma21_check(const IndecompCatalog& catalog, const Subcategory& c)
{
    Lemma21Result out;
    const auto closed = is_predecessor_closed(catalog, c);
    if (!closed.value) {
        out.predecessor_closed = Check::fail(catalog.name(closed.witness->first) + " -> " +
                                             catalog.name(closed.witness->second));
    }

    // (2): a direct scan of Hom(X, Y) for X outside C and Y in C.
    const Subcategory outside = complement(catalog, c);
    for (std::size_t x : outside) {
        for (std::size_t y : c) {
            if (out.hom_vanishing.passed() && hom_dim(catalog.entries[x], catalog.entries[y]) > 0) {
                out.hom_vanishing = Check::fail(catalog.name(x) + " -> " + catalog.name(y));
            }
        }
    }

    // (3): T = entries with Hom(T, C) = 0 is the torsion class cogenerated
    // by C. The pair (T, add C) is split with torsion-free class add(C)
    // exactly when every entry outside C equals its T-trace t(X).
    Subcategory torsion;
    for (std::size_t x = 0; x < catalog.size(); ++x) {
        bool orthogonal = true;
        for (std::size_t y : c) orthogonal = orthogonal && catalog.hom_dims[x][y] == 0;
        if (orthogonal) torsion.push_back(x);
    }
    std::vector<RightModule> parts;
    for (std::size_t t : torsion) parts.push_back(catalog.entries[t]);
    const RightModule generator = direct_sum(parts, catalog.algebra);
    for (std::size_t x : outside) {
        if (trace(generator, catalog.entries[x]).module.dim() != catalog.entries[x].dim()) {
            std::string why = catalog.name(x) + " is neither torsion nor in C";
            for (std::size_t y : c) {
                if (catalog.hom_dims[x][y] > 0) {
                    why = catalog.name(x) + " -> " + catalog.name(y);
                    break;
                }
            }
            out.split_torsion_free = Check::fail(why);
            break;
        }
    }
    return out;
}

// ------------------------------------------------ abelian exact conditions

Check Prop23Result::abelian_exact() const
{
    if (conditions[0].verdict != Verdict::Inconclusive) return conditions[0];
    return conditions[4];
}

namespace {

struct SumObject {
    std::vector<std::size_t> parts;
    RightModule module;
    std::string name;
};

std::vector<SumObject> sums_of(const IndecompCatalog& catalog, const Subcategory& c, std::size_t bound)
{
    std::vector<SumObject> out;
    for (std::size_t i : c) out.push_back({{i}, catalog.entries[i], catalog.name(i)});
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a; b < c.size(); ++b) {
            const RightModule& x = catalog.entries[c[a]];
            const RightModule& y = catalog.entries[c[b]];
            if (x.dim() + y.dim() > bound) continue;
            out.push_back({{c[a], c[b]}, direct_sum(x, y), catalog.name(c[a]) + "+" + catalog.name(c[b])});
        }
    }
    return out;
}

using SubspaceKey = std::pair<std::size_t, std::vector<Scalar>>;

SubspaceKey key_of(const Matrix& rref_rows) { return {rref_rows.rows(), rref_rows.data()}; }

// Name of an indecomposable summand of `m` lying outside add(C), if any.
std::optional<std::string> summand_outside(const IndecompCatalog& catalog, const Subcategory& c, const RightModule& m,
                                           const Limits& limits)
{
    for (const RightModule& part : decompose(m, limits)) {
        const auto idx = catalog.find(part);
        if (!idx) return dim_vector_string(part) + " (not in catalog)";
        if (!contains(c, *idx)) return catalog.name(*idx);
    }
    return std::nullopt;
}

Matrix subspace_sum(const Matrix& a, const Matrix& b) { return row_basis(vstack(a, b)); }

}  // namespace

Prop23Result prop23_conditions(const IndecompCatalog& catalog, const Subcategory& c, const Prop23Options& options)
{
    Prop23Result out;
    const AlgebraPtr& alg = catalog.algebra;
    const Field f = alg->field();
    const std::size_t bound = options.sum_dim_bound ? options.sum_dim_bound : catalog.max_dim;
    const Limits& limits = options.limits;
    const std::vector<SumObject> sums = sums_of(catalog, c, bound);

    // (1) and (2). Images of maps from a sum X1 + X2 are sums of images from
    // X1 and X2, so images are collected per entry and then combined.
    try {
        Check kernels;
        Check cokernels;
        for (const SumObject& y : sums) {
            std::map<std::size_t, std::vector<Matrix>> images_from;  // entry -> distinct images in y
            for (std::size_t x : c) {
                std::set<SubspaceKey> seen;
                std::vector<Matrix>& list = images_from[x];
                for (const Matrix& map : enumerate_span(hom_space(catalog.entries[x], y.module), f, limits)) {
                    Matrix im = image(map);
                    if (seen.insert(key_of(im)).second) list.push_back(std::move(im));
                }
            }
            std::set<SubspaceKey> done;
            std::vector<std::pair<std::string, Matrix>> images;
            const auto note = [&](const std::string& source, Matrix im) {
                if (done.insert(key_of(im)).second) images.emplace_back(source, std::move(im));
            };
            for (const SumObject& x : sums) {
                if (x.parts.size() == 1) {
                    for (const Matrix& im : images_from[x.parts[0]]) note(x.name, im);
                } else {
                    for (const Matrix& u : images_from[x.parts[0]]) {
                        for (const Matrix& v : images_from[x.parts[1]]) note(x.name, subspace_sum(u, v));
                    }
                }
            }
            for (const auto& [source, im] : images) {
                if (!cokernels.passed()) break;
                const Quotient q = quotient(y.module, im);
                if (auto bad = summand_outside(catalog, c, q.module, limits)) {
                    cokernels = Check::fail("coker(" + source + " -> " + y.name + ") has summand " + *bad);
                }
            }
            if (!cokernels.passed()) break;
        }
        // Kernels of maps from sums into single entries and into sums.
        for (const SumObject& x : sums) {
            if (!kernels.passed()) break;
            std::set<SubspaceKey> seen;
            for (const SumObject& y : sums) {
                for (const Matrix& map : enumerate_span(hom_space(x.module, y.module), f, limits)) {
                    const Matrix k = left_kernel(map);
                    if (!seen.insert(key_of(k)).second) continue;
                    const Submodule sub = submodule(x.module, k);
                    if (auto bad = summand_outside(catalog, c, sub.module, limits)) {
                        kernels = Check::fail("ker(" + x.name + " -> " + y.name + ") has summand " + *bad);
                        break;
                    }
                }
                if (!kernels.passed()) break;
            }
        }
        out.conditions[1] = cokernels;
        out.conditions[0] = !kernels.passed() ? kernels : cokernels;
    } catch (const EnumerationCapExceeded& e) {
        out.conditions[0] = Check::inconclusive(e.what());
        out.conditions[1] = Check::inconclusive(e.what());
    }

    // (3) quotients of every sum.
    try {
        for (const SumObject& y : sums) {
            for (const Quotient& q : quotients_all(y.module, limits)) {
                if (auto bad = summand_outside(catalog, c, q.module, limits)) {
                    out.conditions[2] = Check::fail("quotient " + dim_vector_string(q.module) + " of " + y.name +
                                                    " has summand " + *bad);
                    break;
                }
            }
            if (!out.conditions[2].passed()) break;
        }
    } catch (const EnumerationCapExceeded& e) {
        out.conditions[2] = Check::inconclusive(e.what());
    }

    // (4) tops of the projectives in C.
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
        const auto p = catalog.projective_entry(x);
        if (!p || !contains(c, *p)) continue;
        const auto s = catalog.simple_entry(x);
        if (!s || !contains(c, *s)) {
            out.conditions[3] = Check::fail("top(" + catalog.name(*p) + ") = S" + alg->vertex_label(x) + " is not in C");
            break;
        }
    }

    // (5) composition factors, read off the dimension vectors.
    for (std::size_t i : c) {
        const auto& dv = catalog.entries[i].dim_vector();
        for (std::size_t x = 0; x < dv.size() && out.conditions[4].passed(); ++x) {
            if (!dv[x]) continue;
            const auto s = catalog.simple_entry(x);
            if (!s || !contains(c, *s)) {
                out.conditions[4] =
                    Check::fail("S" + alg->vertex_label(x) + " is a composition factor of " + catalog.name(i));
            }
        }
        if (!out.conditions[4].passed()) break;
    }

    // (6) add(C) = Gen(P_C).
    const SupportingProjective pc = supporting_projective(catalog, c);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const bool generated = is_generated_by(pc.module, catalog.entries[i]);
        const bool member = contains(c, i);
        if (generated != member) {
            out.conditions[5] = Check::fail(catalog.name(i) + (member ? " is in C but not generated by P_C"
                                                                      : " is generated by P_C but not in C"));
            break;
        }
    }
    return out;
}

// ------------------------------------------------------ structural test

Check arrow_source_check(const AlgebraPtr& algebra, const VertexSubset& sigma)
{
    if (sigma.empty() || sigma.is_all()) return Check::ok();
    const Quiver q = ext_quiver(*algebra);
    const AlgebraPtr corner = corner_algebra(algebra, sigma);
    const Quiver qc = ext_quiver(*corner);
    for (const Arrow& a : q.arrows) {
        if (sigma.contains(a.source) || !sigma.contains(a.target)) continue;
        const std::size_t local = *corner->find_vertex(algebra->vertex_label(a.target));
        if (!is_source(qc, local)) {
            return Check::fail("arrow " + algebra->vertex_label(a.source) + "->" + algebra->vertex_label(a.target) +
                               " but " + algebra->vertex_label(a.target) + " is not a source of the corner quiver");
        }
    }
    return Check::ok();
}

namespace {

std::optional<std::size_t> global_dimension(const AlgebraPtr& algebra, std::size_t cap)
{
    std::size_t best = 0;
    for (std::size_t x = 0; x < algebra->vertex_count(); ++x) {
        const auto pd = pd_up_to(simple(algebra, x), cap);
        if (!pd) return std::nullopt;
        best = std::max(best, *pd);
    }
    return best;
}

}  // namespace

SigmaRecord sigma_is_valid(const AlgebraPtr& algebra, const VertexSubset& sigma, const Limits& limits)
{
    SigmaRecord rec;
    rec.sigma = sigma;
    rec.forbidden_corner_dim = forbidden_corner_dim(*algebra, sigma);
    if (sigma.empty()) {
        rec.m_injective = true;
        rec.m_hereditary_injective = true;
        rec.valid = true;
        rec.corner_quiver = Quiver{};
        rec.corner_gldim = 0;
        return rec;
    }
    const RightModule m = off_corner_bimodule(algebra, sigma);
    rec.m_dim_vector = m.dim_vector();
    rec.m_injective = is_injective(m);
    try {
        auto hi = is_hereditary_injective(m, limits);
        rec.m_hereditary_injective = hi.value;
        rec.m_witness = std::move(hi.witness);
    } catch (const EnumerationCapExceeded&) {
        if (rec.forbidden_corner_dim == 0) throw;
    }
    rec.valid = rec.forbidden_corner_dim == 0 && rec.m_hereditary_injective.value_or(false);
    if (rec.valid) {
        const AlgebraPtr corner = corner_algebra(algebra, sigma);
        rec.corner_quiver = ext_quiver(*corner);
        rec.corner_gldim = global_dimension(corner, limits.pd_cap);
        rec.arrow_sources = arrow_source_check(algebra, sigma);
    }
    return rec;
}

std::vector<VertexSubset> ClassificationReport::valid() const
{
    std::vector<VertexSubset> out;
    for (const SigmaRecord& r : records) {
        if (r.valid) out.push_back(r.sigma);
    }
    return out;
}

ClassificationReport classify_all_sigma(const AlgebraPtr& algebra, const Limits& limits)
{
    const std::size_t n = algebra->vertex_count();
    if (n > 20) throw std::invalid_argument("too many vertices for an exhaustive subset scan");
    ClassificationReport report;
    if (!is_connected(*algebra)) report.warnings.push_back("algebra is not connected");
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) report.records.push_back(sigma_is_valid(algebra, {n, mask}, limits));
    return report;
}

// ------------------------------------------------------ torsion radical

Submodule torsion_radical(const VertexSubset& sigma, const RightModule& x)
{
    const Algebra& alg = *x.algebra();
    Matrix rows(0, x.dim(), x.field());
    for (std::size_t b = 0; b < alg.dim(); ++b) {
        if (!sigma.contains(alg.element(b).source)) rows = vstack(rows, x.action(b));
    }
    return submodule(x, row_basis(rows));
}

TorsionPairReport splitness_check(const VertexSubset& sigma, const IndecompCatalog& catalog, std::size_t sum_dim_bound)
{
    TorsionPairReport out;
    const std::size_t bound = sum_dim_bound ? sum_dim_bound : catalog.max_dim;
    const auto examine = [&](const std::string& name, const RightModule& m, bool single) {
        const Submodule t = torsion_radical(sigma, m);
        TorsionEntry e;
        e.module = name;
        e.t_dim = t.module.dim();
        e.torsion = e.t_dim == m.dim();
        e.torsion_free = e.t_dim == 0;
        e.splits = inclusion_splits(m, t);
        if (out.overall.passed()) {
            if (single && !e.torsion && !e.torsion_free) {
                out.overall = Check::fail(name + " is neither torsion nor torsion-free");
            } else if (!e.splits) {
                out.overall = Check::fail("t(" + name + ") is not a direct summand");
            }
        }
        out.entries.push_back(std::move(e));
    };
    for (std::size_t i = 0; i < catalog.size(); ++i) examine(catalog.name(i), catalog.entries[i], true);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t j = i; j < catalog.size(); ++j) {
            if (catalog.entries[i].dim() + catalog.entries[j].dim() > bound) continue;
            examine(catalog.name(i) + "+" + catalog.name(j), direct_sum(catalog.entries[i], catalog.entries[j]), false);
        }
    }
    return out;
}

GlDimResult gldim_equality_check(const AlgebraPtr& algebra, const VertexSubset& sigma, const IndecompCatalog& catalog,
                                 std::size_t pd_cap)
{
    GlDimResult out;
    if (sigma.empty()) {
        out.check = Check::not_applicable("empty corner");
        return out;
    }
    out.corner_gldim = global_dimension(corner_algebra(algebra, sigma), pd_cap);
    std::size_t sup = 0;
    bool finite = true;
    for (std::size_t i : annihilated_by_complement(catalog, sigma)) {
        const auto pd = pd_up_to(catalog.entries[i], pd_cap);
        if (!pd) {
            finite = false;
            break;
        }
        sup = std::max(sup, *pd);
    }
    if (finite) out.sup_pd = sup;
    if (!out.corner_gldim || !out.sup_pd) {
        out.check = Check::inconclusive("a side exceeds the pd cap " + std::to_string(pd_cap));
    } else if (*out.corner_gldim != *out.sup_pd) {
        out.check = Check::fail("gl.dim " + std::to_string(*out.corner_gldim) + " but sup pd " + std::to_string(*out.sup_pd));
    }
    return out;
}

Check trace_is_right_approximation(const IndecompCatalog& catalog, const Subcategory& c, const RightModule& p,
                                   const RightModule& x)
{
    const Submodule t = trace(p, x);
    for (std::size_t d : c) {
        for (const Matrix& g : hom_space(catalog.entries[d], x)) {
            if (!row_space_contains(t.inclusion, image(g))) {
                return Check::fail("a map " + catalog.name(d) + " -> " + dim_vector_string(x) + " leaves the trace");
            }
        }
    }
    return Check::ok();
}

// ------------------------------------------------------------- cross-check

namespace {

// Predecessor-closed subcategories are unions of principal down-sets.
std::optional<std::vector<Subcategory>> all_downsets(const IndecompCatalog& catalog, std::size_t cap)
{
    const std::size_t n = catalog.size();
    std::vector<Subcategory> principal(n);
    for (std::size_t x = 0; x < n; ++x) principal[x] = predecessors_of(catalog, {x});
    std::set<Subcategory> seen{Subcategory{}};
    std::deque<Subcategory> queue{Subcategory{}};
    while (!queue.empty()) {
        const Subcategory d = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < n; ++x) {
            if (contains(d, x)) continue;
            Subcategory u;
            std::set_union(d.begin(), d.end(), principal[x].begin(), principal[x].end(), std::back_inserter(u));
            if (seen.insert(u).second) {
                if (seen.size() > cap) return std::nullopt;
                queue.push_back(std::move(u));
            }
        }
    }
    return std::vector<Subcategory>(seen.begin(), seen.end());
}

}  // namespace

CrosscheckResult theorem_crosscheck(const AlgebraPtr& algebra, const IndecompCatalog& catalog,
                                    const ClassificationReport& classification, const CrosscheckOptions& options)
{
    CrosscheckResult out;
    const auto fail = [&](std::string why) {
        if (!out.check.failed()) out.check = Check::fail(std::move(why));
    };

    // (a) every valid sigma gives an abelian exact predecessor-closed C_sigma
    // whose complement is generated by (1 - e)A.
    for (const VertexSubset& sigma : classification.valid()) {
        const Subcategory cs = annihilated_by_complement(catalog, sigma);
        out.pairs.emplace_back(sigma, cs);
        const std::string tag = "sigma " + subset_string(*algebra, sigma);
        const auto closed = is_predecessor_closed(catalog, cs);
        if (!closed.value) fail(tag + ": C_sigma not predecessor-closed");
        const Prop23Result p23 = prop23_conditions(catalog, cs, options.prop23);
        for (std::size_t k = 0; k < 6; ++k) {
            if (p23.conditions[k].failed()) {
                fail(tag + ": condition (" + std::to_string(k + 1) + ") fails: " + p23.conditions[k].witness);
            }
        }
        for (std::size_t x : complement(catalog, cs)) {
            if (torsion_radical(sigma, catalog.entries[x]).module.dim() != catalog.entries[x].dim()) {
                fail(tag + ": " + catalog.name(x) + " is not generated by (1-e)A");
            }
        }
    }

    // (b) every predecessor-closed C closed under composition factors comes
    // from its supporting vertex set.
    const auto downsets = all_downsets(catalog, options.downset_cap);
    if (!downsets) {
        if (!out.check.failed()) out.check = Check::inconclusive("more than " + std::to_string(options.downset_cap) +
                                                                 " predecessor-closed subcategories");
        return out;
    }
    out.closed_count = downsets->size();
    const std::vector<VertexSubset> valid = classification.valid();
    for (const Subcategory& c : *downsets) {
        bool factors = true;
        for (std::size_t i : c) {
            const auto& dv = catalog.entries[i].dim_vector();
            for (std::size_t x = 0; x < dv.size(); ++x) {
                if (dv[x] && !(catalog.simple_entry(x) && contains(c, *catalog.simple_entry(x)))) factors = false;
            }
        }
        if (!factors) continue;
        out.abelian_closed.push_back(c);
        const VertexSubset sigma_c = supporting_projective(catalog, c).vertices;
        const std::string tag = describe(catalog, c);
        if (std::find(valid.begin(), valid.end(), sigma_c) == valid.end()) {
            fail(tag + ": supporting vertices " + subset_string(*algebra, sigma_c) + " are not a valid sigma");
        } else if (annihilated_by_complement(catalog, sigma_c) != c) {
            fail(tag + ": differs from C_sigma for sigma " + subset_string(*algebra, sigma_c));
        }
    }

    // (c) the two collections coincide, and sigma -> C_sigma is injective.
    std::set<Subcategory> from_sigma;
    for (const auto& [sigma, cs] : out.pairs) {
        if (!from_sigma.insert(cs).second) fail("two valid sigma share C_sigma " + describe(catalog, cs));
    }
    const std::set<Subcategory> from_closed(out.abelian_closed.begin(), out.abelian_closed.end());
    if (from_sigma != from_closed) {
        fail("valid sigma give " + std::to_string(from_sigma.size()) + " subcategories but " +
             std::to_string(from_closed.size()) + " abelian exact predecessor-closed ones exist");
    }
    return out;
}

}  // namespace tpc
