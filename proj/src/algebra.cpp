#include "tpc/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tpc {

// ---------------------------------------------------------------- Quiver

std::size_t Quiver::vertex_index(const std::string& label) const
{
    const auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end()) throw std::out_of_range("unknown vertex " + label);
    return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& label) const
{
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].label == label) return i;
    }
    return std::nullopt;
}

std::size_t Quiver::arrow_count(std::size_t x, std::size_t y) const
{
    return static_cast<std::size_t>(std::count_if(
        arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.source == x && a.target == y; }));
}

void Quiver::validate() const
{
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw std::invalid_argument("duplicate vertex label");
    std::set<std::string> arrow_labels;
    for (const Arrow& a : arrows) {
        if (!arrow_labels.insert(a.label).second) throw std::invalid_argument("duplicate arrow label " + a.label);
        if (a.source >= vertices.size() || a.target >= vertices.size()) {
            throw std::invalid_argument("arrow " + a.label + " has an undeclared endpoint");
        }
    }
}

// ---------------------------------------------------------- VertexSubset

VertexSubset::VertexSubset(std::size_t universe, std::uint32_t mask) : universe_(universe), mask_(mask)
{
    if (universe > 32) throw std::invalid_argument("at most 32 vertices are supported");
    mask_ &= full_mask();
}

VertexSubset VertexSubset::all(std::size_t universe)
{
    VertexSubset s(universe, 0);
    s.mask_ = s.full_mask();
    return s;
}

VertexSubset VertexSubset::from_members(std::size_t universe, const std::vector<std::size_t>& members)
{
    std::uint32_t mask = 0;
    for (std::size_t v : members) {
        if (v >= universe) throw std::out_of_range("vertex outside subset universe");
        mask |= 1U << v;
    }
    return {universe, mask};
}

std::size_t VertexSubset::size() const { return static_cast<std::size_t>(__builtin_popcount(mask_)); }

std::vector<std::size_t> VertexSubset::members() const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < universe_; ++v) {
        if (contains(v)) out.push_back(v);
    }
    return out;
}

// --------------------------------------------------------------- Algebra

namespace {

// Coordinates of u * v for coordinate vectors u, v (1 x dim rows).
Matrix multiply_elements(const Algebra& alg, const Matrix& u, const Matrix& v)
{
    const Field& f = alg.field();
    Matrix out(1, alg.dim(), f);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (u(0, i) == 0) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (v(0, j) == 0) continue;
            const Scalar c = f.mul(u(0, i), v(0, j));
            for (const Term& t : alg.product(i, j)) out(0, t.index) = f.add(out(0, t.index), f.mul(c, t.coeff));
        }
    }
    return out;
}

Matrix product_row(const Algebra& alg, std::size_t i, std::size_t j)
{
    Matrix out(1, alg.dim(), alg.field());
    for (const Term& t : alg.product(i, j)) out(0, t.index) = t.coeff;
    return out;
}

}  // namespace

Algebra::Algebra(Field field, std::vector<std::string> vertex_labels, std::vector<Arrow> arrows,
                 std::vector<BasisElement> basis, std::vector<std::vector<std::vector<Term>>> products)
    : field_(field),
      vertex_labels_(std::move(vertex_labels)),
      arrows_(std::move(arrows)),
      basis_(std::move(basis)),
      products_(std::move(products))
{
    const std::size_t n = vertex_labels_.size();
    idempotents_.assign(n, basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const BasisElement& b = basis_[i];
        if (b.source >= n || b.target >= n) throw AlgebraError("basis element with unknown endpoint");
        if (b.is_idempotent()) {
            if (b.source != b.target) throw AlgebraError("idempotent with distinct endpoints");
            idempotents_[b.source] = i;
        } else {
            radical_.push_back(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (idempotents_[v] == basis_.size()) throw AlgebraError("missing idempotent for vertex " + vertex_labels_[v]);
    }

    // J^2 and a lift of J/J^2.
    Matrix j2(0, basis_.size(), field_);
    for (std::size_t a : radical_) {
        for (std::size_t b : radical_) {
            if (!products_[a][b].empty()) j2 = vstack(j2, product_row(*this, a, b));
        }
    }
    Matrix span = row_basis(j2);
    generators_ = idempotents_;
    for (std::size_t r : radical_) {
        const Matrix e = Matrix::unit_row(basis_.size(), r, field_);
        if (!row_space_contains(span, e)) {
            generators_.push_back(r);
            span = row_space_sum(span, e);
        }
    }

    // Loewy length: iterate J^k = J^{k-1} J until zero.
    Matrix power(0, basis_.size(), field_);
    for (std::size_t r : radical_) power = vstack(power, Matrix::unit_row(basis_.size(), r, field_));
    power = row_basis(power);
    loewy_length_ = 1;
    while (power.rows() > 0) {
        ++loewy_length_;
        if (loewy_length_ > basis_.size() + 1) throw AlgebraError("radical is not nilpotent");
        Matrix next(0, basis_.size(), field_);
        for (std::size_t i = 0; i < power.rows(); ++i) {
            for (std::size_t r : radical_) {
                next = vstack(next, multiply_elements(*this, power.row(i), Matrix::unit_row(basis_.size(), r, field_)));
            }
        }
        power = row_basis(next);
    }
}

std::optional<std::size_t> Algebra::find_vertex(const std::string& label) const
{
    for (std::size_t v = 0; v < vertex_labels_.size(); ++v) {
        if (vertex_labels_[v] == label) return v;
    }
    return std::nullopt;
}

std::string Algebra::element_name(std::size_t i) const
{
    const BasisElement& b = basis_.at(i);
    if (b.is_idempotent()) return "e" + vertex_labels_[b.source];
    std::string out;
    for (std::size_t k = 0; k < b.word.size(); ++k) {
        if (k) out += '.';
        out += arrows_.at(b.word[k]).label;
    }
    return out;
}

std::vector<std::size_t> Algebra::block(std::size_t x, std::size_t y) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].source == x && basis_[i].target == y) out.push_back(i);
    }
    return out;
}

bool Algebra::check_axioms() const
{
    const std::size_t d = dim();
    // Unit: the idempotents sum to the identity, and e_x e_y = delta e_x.
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        for (std::size_t w = 0; w < vertex_count(); ++w) {
            const auto& p = product(idempotents_[v], idempotents_[w]);
            if (v == w) {
                if (p.size() != 1 || p[0].index != idempotents_[v] || p[0].coeff != 1) return false;
            } else if (!p.empty()) {
                return false;
            }
        }
    }
    Matrix one(1, d, field_);
    for (std::size_t e : idempotents_) one(0, e) = 1;
    for (std::size_t i = 0; i < d; ++i) {
        const Matrix bi = Matrix::unit_row(d, i, field_);
        if (!(multiply_elements(*this, one, bi) == bi) || !(multiply_elements(*this, bi, one) == bi)) return false;
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix ij = product_row(*this, i, j);
            for (std::size_t k = 0; k < d; ++k) {
                const Matrix left = multiply_elements(*this, ij, Matrix::unit_row(d, k, field_));
                const Matrix right = multiply_elements(*this, Matrix::unit_row(d, i, field_), product_row(*this, j, k));
                if (!(left == right)) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------- build_algebra

namespace {

struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> word;
};

// Path-length-then-lexicographic order on arrow labels.
struct MonomialOrder {
    std::vector<std::size_t> arrow_rank;

    bool less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return arrow_rank[a[i]] < arrow_rank[b[i]];
        }
        return false;
    }
};

void validate_relations(const BoundQuiverSpec& spec)
{
    const Quiver& q = spec.quiver;
    for (std::size_t r = 0; r < spec.relations.size(); ++r) {
        const Relation& rel = spec.relations[r];
        if (rel.terms.empty()) throw AlgebraError("relation " + std::to_string(r + 1) + " has no terms");
        std::optional<std::pair<std::size_t, std::size_t>> ends;
        for (const RelationTerm& term : rel.terms) {
            if (term.path.size() < 2) {
                throw AlgebraError("non-admissible relations: relation " + std::to_string(r + 1) +
                                   " contains a path of length < 2");
            }
            for (std::size_t a : term.path) {
                if (a >= q.arrows.size()) throw AlgebraError("relation refers to an unknown arrow");
            }
            for (std::size_t k = 0; k + 1 < term.path.size(); ++k) {
                if (q.arrows[term.path[k]].target != q.arrows[term.path[k + 1]].source) {
                    throw AlgebraError("relation " + std::to_string(r + 1) + " contains a non-composable path");
                }
            }
            const std::pair<std::size_t, std::size_t> e{q.arrows[term.path.front()].source,
                                                        q.arrows[term.path.back()].target};
            if (ends && *ends != e) {
                throw AlgebraError("relation " + std::to_string(r + 1) + " mixes non-parallel paths");
            }
            ends = e;
        }
    }
}

}  // namespace

AlgebraPtr build_algebra(const BoundQuiverSpec& spec, const BuildOptions& options)
{
    const Quiver& q = spec.quiver;
    q.validate();
    validate_relations(spec);
    const Field f = spec.field;
    const std::size_t n = q.vertex_count();
    if (n == 0) throw AlgebraError("quiver has no vertices");

    MonomialOrder order;
    {
        std::vector<std::size_t> idx(q.arrows.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return q.arrows[a].label < q.arrows[b].label; });
        order.arrow_rank.assign(q.arrows.size(), 0);
        for (std::size_t r = 0; r < idx.size(); ++r) order.arrow_rank[idx[r]] = r;
    }

    std::vector<std::vector<Path>> by_length;  // by_length[l] = paths of length l
    by_length.emplace_back();
    for (std::size_t v = 0; v < n; ++v) by_length[0].push_back({v, v, {}});

    for (std::size_t level = 1;; ++level) {
        // Extend the path list to length `level`.
        std::vector<Path> next;
        for (const Path& p : by_length.back()) {
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].source != p.target) continue;
                Path e = p;
                e.word.push_back(a);
                e.target = q.arrows[a].target;
                next.push_back(std::move(e));
            }
        }
        by_length.push_back(std::move(next));

        // Columns of each (source, target) block: all paths of length <= level,
        // largest monomial first so that pivots land on leading terms.
        std::vector<std::vector<Path>> blocks(n * n);
        for (const auto& layer : by_length) {
            for (const Path& p : layer) blocks[p.source * n + p.target].push_back(p);
        }
        std::vector<std::map<std::vector<std::size_t>, std::size_t>> column(n * n);
        for (auto& b : blocks) {
            std::sort(b.begin(), b.end(), [&](const Path& x, const Path& y) { return order.less(y.word, x.word); });
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            for (std::size_t c = 0; c < blocks[k].size(); ++c) column[k][blocks[k][c].word] = c;
        }

        // Ideal elements u * r * v truncated to length <= level.
        std::vector<Matrix> rows(n * n);
        for (std::size_t k = 0; k < blocks.size(); ++k) rows[k] = Matrix(0, blocks[k].size(), f);
        for (const Relation& rel : spec.relations) {
            std::size_t min_len = rel.terms.front().path.size();
            for (const auto& t : rel.terms) min_len = std::min(min_len, t.path.size());
            if (min_len > level) continue;
            const std::size_t rs = q.arrows[rel.terms.front().path.front()].source;
            const std::size_t rt = q.arrows[rel.terms.front().path.back()].target;
            for (std::size_t lu = 0; lu + min_len <= level; ++lu) {
                for (const Path& u : by_length[lu]) {
                    if (u.target != rs) continue;
                    for (std::size_t lv = 0; lu + min_len + lv <= level; ++lv) {
                        for (const Path& v : by_length[lv]) {
                            if (v.source != rt) continue;
                            const std::size_t key = u.source * n + v.target;
                            Matrix row(1, blocks[key].size(), f);
                            for (const RelationTerm& t : rel.terms) {
                                if (lu + t.path.size() + lv > level) continue;
                                std::vector<std::size_t> w = u.word;
                                w.insert(w.end(), t.path.begin(), t.path.end());
                                w.insert(w.end(), v.word.begin(), v.word.end());
                                const std::size_t c = column[key].at(w);
                                row(0, c) = f.add(row(0, c), f.reduce(t.coefficient));
                            }
                            if (!row.is_zero()) rows[key] = vstack(rows[key], row);
                        }
                    }
                }
            }
        }

        std::vector<RrefResult> reduced(n * n);
        std::size_t irreducible = 0;
        bool top_layer_reducible = true;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            reduced[k] = rref(rows[k]);
            std::vector<bool> pivot(blocks[k].size(), false);
            for (std::size_t c : reduced[k].pivots) pivot[c] = true;
            for (std::size_t c = 0; c < blocks[k].size(); ++c) {
                if (pivot[c]) continue;
                ++irreducible;
                if (blocks[k][c].word.size() == level) top_layer_reducible = false;
            }
        }
        if (irreducible > options.path_cap) {
            throw AlgebraError("infinite dimensional: more than " + std::to_string(options.path_cap) +
                               " irreducible paths");
        }
        if (!top_layer_reducible) continue;

        // Every path of length `level` lies in the ideal: the basis is the set
        // of irreducible paths of smaller length.
        std::vector<Path> basis_paths;
        std::vector<std::vector<bool>> is_pivot(n * n);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            is_pivot[k].assign(blocks[k].size(), false);
            for (std::size_t c : reduced[k].pivots) is_pivot[k][c] = true;
            for (std::size_t c = 0; c < blocks[k].size(); ++c) {
                if (!is_pivot[k][c]) basis_paths.push_back(blocks[k][c]);
            }
        }
        std::sort(basis_paths.begin(), basis_paths.end(), [&](const Path& x, const Path& y) {
            if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
            if (x.word.empty()) return x.source < y.source;
            return order.less(x.word, y.word);
        });
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_of;
        std::vector<BasisElement> basis;
        for (const Path& p : basis_paths) {
            index_of[{p.source, p.word}] = basis.size();
            basis.push_back({p.source, p.target, p.word});
        }

        auto normal_form = [&](std::size_t s, std::size_t t, const std::vector<std::size_t>& w) {
            std::vector<Term> out;
            if (w.size() >= level) return out;
            const std::size_t key = s * n + t;
            const std::size_t c = column[key].at(w);
            if (!is_pivot[key][c]) {
                out.push_back({index_of.at({s, w}), 1});
                return out;
            }
            const RrefResult& red = reduced[key];
            const auto it = std::find(red.pivots.begin(), red.pivots.end(), c);
            const std::size_t r = static_cast<std::size_t>(it - red.pivots.begin());
            for (std::size_t j = 0; j < blocks[key].size(); ++j) {
                if (j == c || red.reduced(r, j) == 0) continue;
                out.push_back({index_of.at({s, blocks[key][j].word}), f.neg(red.reduced(r, j))});
            }
            std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
            return out;
        };

        const std::size_t d = basis.size();
        std::vector<std::vector<std::vector<Term>>> products(d, std::vector<std::vector<Term>>(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const BasisElement& a = basis[i];
                const BasisElement& b = basis[j];
                if (a.target != b.source) continue;
                std::vector<std::size_t> w = a.word;
                w.insert(w.end(), b.word.begin(), b.word.end());
                products[i][j] = normal_form(a.source, b.target, w);
            }
        }

        auto alg = std::make_shared<Algebra>(f, q.vertices, q.arrows, std::move(basis), std::move(products));
        alg->set_presentation(spec);
        return alg;
    }
}

AlgebraPtr corner_algebra(const AlgebraPtr& algebra, const VertexSubset& sigma)
{
    if (sigma.empty()) throw AlgebraError("corner algebra of an empty vertex set");
    if (sigma.universe() != algebra->vertex_count()) throw AlgebraError("vertex subset universe mismatch");
    const std::vector<std::size_t> kept_vertices = sigma.members();
    std::vector<std::size_t> local_vertex(algebra->vertex_count(), 0);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < kept_vertices.size(); ++k) {
        local_vertex[kept_vertices[k]] = k;
        labels.push_back(algebra->vertex_label(kept_vertices[k]));
    }

    std::vector<std::size_t> kept;
    std::vector<std::size_t> local(algebra->dim(), algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        const BasisElement& b = algebra->element(i);
        if (sigma.contains(b.source) && sigma.contains(b.target)) {
            local[i] = kept.size();
            kept.push_back(i);
        }
    }
    std::vector<BasisElement> basis;
    for (std::size_t i : kept) {
        BasisElement b = algebra->element(i);
        b.source = local_vertex[b.source];
        b.target = local_vertex[b.target];
        basis.push_back(std::move(b));
    }
    std::vector<std::vector<std::vector<Term>>> products(kept.size(), std::vector<std::vector<Term>>(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = 0; b < kept.size(); ++b) {
            for (const Term& t : algebra->product(kept[a], kept[b])) {
                if (local[t.index] == algebra->dim()) throw AlgebraError("corner is not closed under products");
                products[a][b].push_back({local[t.index], t.coeff});
            }
        }
    }
    return std::make_shared<Algebra>(algebra->field(), std::move(labels), algebra->word_arrows(), std::move(basis),
                                     std::move(products));
}

std::size_t forbidden_corner_dim(const Algebra& algebra, const VertexSubset& sigma)
{
    std::size_t count = 0;
    for (const BasisElement& b : algebra.basis()) {
        if (sigma.contains(b.source) && !sigma.contains(b.target)) ++count;
    }
    return count;
}

Quiver ext_quiver(const Algebra& algebra)
{
    Quiver q;
    q.vertices = algebra.vertex_labels();
    const std::size_t d = algebra.dim();
    for (std::size_t x = 0; x < algebra.vertex_count(); ++x) {
        for (std::size_t y = 0; y < algebra.vertex_count(); ++y) {
            std::size_t radical_here = 0;
            for (std::size_t r : algebra.radical()) {
                const BasisElement& b = algebra.element(r);
                if (b.source == x && b.target == y) ++radical_here;
            }
            if (radical_here == 0) continue;
            Matrix square(0, d, algebra.field());
            for (std::size_t a : algebra.radical()) {
                if (algebra.element(a).source != x) continue;
                for (std::size_t b : algebra.radical()) {
                    if (algebra.element(b).target != y || algebra.product(a, b).empty()) continue;
                    Matrix row(1, d, algebra.field());
                    for (const Term& t : algebra.product(a, b)) row(0, t.index) = t.coeff;
                    square = vstack(square, row);
                }
            }
            const std::size_t count = radical_here - rank(square);
            for (std::size_t k = 0; k < count; ++k) {
                q.arrows.push_back({algebra.vertex_label(x) + "->" + algebra.vertex_label(y) +
                                        (count > 1 ? "#" + std::to_string(k + 1) : ""),
                                    x, y});
            }
        }
    }
    return q;
}

bool is_connected(const Quiver& quiver)
{
    const std::size_t n = quiver.vertex_count();
    if (n == 0) return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Arrow& a : quiver.arrows) parent[find(a.source)] = find(a.target);
    const std::size_t root = find(0);
    for (std::size_t v = 1; v < n; ++v) {
        if (find(v) != root) return false;
    }
    return true;
}

bool is_connected(const Algebra& algebra) { return is_connected(ext_quiver(algebra)); }

bool is_source(const Quiver& quiver, std::size_t vertex)
{
    return std::none_of(quiver.arrows.begin(), quiver.arrows.end(), [&](const Arrow& a) { return a.target == vertex; });
}

bool has_oriented_cycle(const Quiver& quiver)
{
    // Kahn's algorithm: a cycle remains iff some vertex never reaches in-degree 0.
    const std::size_t n = quiver.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (const Arrow& a : quiver.arrows) ++indegree[a.target];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++removed;
        for (const Arrow& a : quiver.arrows) {
            if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
        }
    }
    return removed != n;
}

}  // namespace tpc
