#include "tpc/module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tpc {

// ------------------------------------------------------------ RightModule

RightModule::RightModule(AlgebraPtr algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action))
{
    if (!algebra_) throw std::invalid_argument("module without algebra");
    if (action_.size() != algebra_->dim()) throw std::invalid_argument("one action matrix per basis element required");
    dim_ = action_.empty() ? 0 : action_.front().rows();
    for (const Matrix& a : action_) {
        if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("action matrices must be square of equal size");
    }
    dim_vector_.resize(algebra_->vertex_count());
    for (std::size_t v = 0; v < algebra_->vertex_count(); ++v) dim_vector_[v] = rank(action_[algebra_->idempotent(v)]);
}

RightModule RightModule::zero(AlgebraPtr algebra)
{
    const std::size_t d = algebra->dim();
    const Field f = algebra->field();
    return {std::move(algebra), std::vector<Matrix>(d, Matrix(0, 0, f))};
}

VertexSubset RightModule::support() const
{
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < dim_vector_.size(); ++v) {
        if (dim_vector_[v] > 0) members.push_back(v);
    }
    return VertexSubset::from_members(dim_vector_.size(), members);
}

bool RightModule::check_axioms() const
{
    const Algebra& alg = *algebra_;
    const Field& f = alg.field();
    Matrix one(dim_, dim_, f);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) one = one + action_[alg.idempotent(v)];
    if (!one.is_identity()) return false;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            Matrix expected(dim_, dim_, f);
            for (const Term& t : alg.product(i, j)) expected = expected + action_[t.index].scaled(t.coeff);
            if (!(action_[i] * action_[j] == expected)) return false;
        }
    }
    return true;
}

std::vector<Scalar> RightModule::canonical_bytes() const
{
    std::vector<Scalar> out;
    for (std::size_t d : dim_vector_) out.push_back(static_cast<Scalar>(d));
    for (std::size_t g : algebra_->generators()) {
        const auto& data = action_[g].data();
        out.insert(out.end(), data.begin(), data.end());
    }
    return out;
}

std::string dim_vector_string(const RightModule& m)
{
    std::string out = "(";
    for (std::size_t v = 0; v < m.dim_vector().size(); ++v) {
        if (v) out += ',';
        out += std::to_string(m.dim_vector()[v]);
    }
    return out + ")";
}

// ----------------------------------------------------------- constructors

RightModule simple(const AlgebraPtr& algebra, std::size_t vertex)
{
    if (vertex >= algebra->vertex_count()) throw std::out_of_range("unknown vertex");
    const Field f = algebra->field();
    std::vector<Matrix> action(algebra->dim(), Matrix(1, 1, f));
    action[algebra->idempotent(vertex)](0, 0) = 1;
    return {algebra, std::move(action)};
}

RightModule projective(const AlgebraPtr& algebra, std::size_t vertex)
{
    if (vertex >= algebra->vertex_count()) throw std::out_of_range("unknown vertex");
    const Field f = algebra->field();
    std::vector<std::size_t> rows;
    std::vector<std::size_t> local(algebra->dim(), algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        if (algebra->element(i).source == vertex) {
            local[i] = rows.size();
            rows.push_back(i);
        }
    }
    std::vector<Matrix> action(algebra->dim(), Matrix(rows.size(), rows.size(), f));
    for (std::size_t b = 0; b < algebra->dim(); ++b) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (const Term& t : algebra->product(rows[r], b)) action[b](r, local[t.index]) = t.coeff;
        }
    }
    return {algebra, std::move(action)};
}

RightModule injective(const AlgebraPtr& algebra, std::size_t vertex)
{
    if (vertex >= algebra->vertex_count()) throw std::out_of_range("unknown vertex");
    const Field f = algebra->field();
    // Dual basis of A e_x: phi_i . b = sum_j coeff_{u_i}(b u_j) phi_j.
    std::vector<std::size_t> cols;
    std::vector<std::size_t> local(algebra->dim(), algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        if (algebra->element(i).target == vertex) {
            local[i] = cols.size();
            cols.push_back(i);
        }
    }
    std::vector<Matrix> action(algebra->dim(), Matrix(cols.size(), cols.size(), f));
    for (std::size_t b = 0; b < algebra->dim(); ++b) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (const Term& t : algebra->product(b, cols[j])) action[b](local[t.index], j) = t.coeff;
        }
    }
    return {algebra, std::move(action)};
}

RightModule direct_sum(const RightModule& a, const RightModule& b)
{
    if (a.algebra() != b.algebra()) throw std::invalid_argument("direct sum over different algebras");
    std::vector<Matrix> action;
    action.reserve(a.actions().size());
    for (std::size_t i = 0; i < a.actions().size(); ++i) action.push_back(block_diag(a.action(i), b.action(i)));
    return {a.algebra(), std::move(action)};
}

RightModule direct_sum(const std::vector<RightModule>& parts, const AlgebraPtr& algebra)
{
    RightModule out = RightModule::zero(algebra);
    for (const RightModule& p : parts) out = direct_sum(out, p);
    return out;
}

RightModule regular(const AlgebraPtr& algebra)
{
    std::vector<RightModule> parts;
    for (std::size_t v = 0; v < algebra->vertex_count(); ++v) parts.push_back(projective(algebra, v));
    return direct_sum(parts, algebra);
}

RightModule from_representation(const AlgebraPtr& algebra, const std::vector<std::size_t>& dim_vector,
                                 const std::vector<Matrix>& arrow_matrices)
{
    const Field f = algebra->field();
    const std::size_t n = algebra->vertex_count();
    if (dim_vector.size() != n) throw std::invalid_argument("dimension vector length mismatch");
    const auto& arrows = algebra->word_arrows();
    if (arrow_matrices.size() != arrows.size()) throw std::invalid_argument("one matrix per arrow required");
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + dim_vector[v];
    const std::size_t d = offset[n];

    std::vector<Matrix> action;
    action.reserve(algebra->dim());
    for (const BasisElement& b : algebra->basis()) {
        Matrix m(d, d, f);
        if (b.is_idempotent()) {
            for (std::size_t k = offset[b.source]; k < offset[b.source + 1]; ++k) m(k, k) = 1;
        } else {
            Matrix path = Matrix::identity(dim_vector[b.source], f);
            for (std::size_t a : b.word) path = path * arrow_matrices[a];
            for (std::size_t r = 0; r < path.rows(); ++r) {
                for (std::size_t c = 0; c < path.cols(); ++c) m(offset[b.source] + r, offset[b.target] + c) = path(r, c);
            }
        }
        action.push_back(std::move(m));
    }
    return {algebra, std::move(action)};
}

RightModule off_corner_bimodule(const AlgebraPtr& algebra, const VertexSubset& sigma)
{
    const AlgebraPtr corner = corner_algebra(algebra, sigma);
    const Field f = algebra->field();
    std::vector<std::size_t> rows;
    std::vector<std::size_t> local(algebra->dim(), algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        const BasisElement& b = algebra->element(i);
        if (!sigma.contains(b.source) && sigma.contains(b.target)) {
            local[i] = rows.size();
            rows.push_back(i);
        }
    }
    // Corner basis elements, in corner order, as indices of the big algebra.
    std::vector<std::size_t> corner_in_parent;
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        const BasisElement& b = algebra->element(i);
        if (sigma.contains(b.source) && sigma.contains(b.target)) corner_in_parent.push_back(i);
    }
    std::vector<Matrix> action(corner->dim(), Matrix(rows.size(), rows.size(), f));
    for (std::size_t c = 0; c < corner_in_parent.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (const Term& t : algebra->product(rows[r], corner_in_parent[c])) action[c](r, local[t.index]) = t.coeff;
        }
    }
    return {corner, std::move(action)};
}

// -------------------------------------------------------- sub and quotient

Matrix generated_subspace(const RightModule& m, const Matrix& span)
{
    Matrix current = row_basis(span);
    const auto& gens = m.algebra()->generators();
    while (true) {
        Matrix grown = current;
        for (std::size_t g : gens) grown = vstack(grown, current * m.action(g));
        grown = row_basis(grown);
        if (grown.rows() == current.rows()) return current;
        current = std::move(grown);
    }
}

Submodule submodule(const RightModule& m, const Matrix& span)
{
    const RrefResult red = rref(span.rows() == 0 ? Matrix(0, m.dim(), m.field()) : span);
    std::vector<std::size_t> keep(red.rank);
    for (std::size_t i = 0; i < red.rank; ++i) keep[i] = i;
    Matrix basis = red.reduced.rows_subset(keep);
    const std::size_t k = basis.rows();
    std::vector<Matrix> action;
    action.reserve(m.actions().size());
    for (const Matrix& r : m.actions()) {
        const Matrix moved = basis * r;
        Matrix local(k, k, m.field());
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) local(i, j) = moved(i, red.pivots[j]);
        }
        if (!(local * basis == moved)) throw std::invalid_argument("subspace is not a submodule");
        action.push_back(std::move(local));
    }
    return {RightModule(m.algebra(), std::move(action)), std::move(basis)};
}

Quotient quotient(const RightModule& m, const Matrix& span)
{
    const std::size_t d = m.dim();
    const Field f = m.field();
    const RrefResult red = rref(span.rows() == 0 ? Matrix(0, d, f) : span);
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    std::vector<std::size_t> position(d, 0);
    for (std::size_t c = 0; c < d; ++c) {
        if (!is_pivot[c]) {
            position[c] = free_cols.size();
            free_cols.push_back(c);
        }
    }
    const std::size_t q = free_cols.size();
    Matrix section(q, d, f);
    for (std::size_t j = 0; j < q; ++j) section(j, free_cols[j]) = 1;
    Matrix projection(d, q, f);
    for (std::size_t c = 0; c < d; ++c) {
        if (!is_pivot[c]) projection(c, position[c]) = 1;
    }
    for (std::size_t r = 0; r < red.rank; ++r) {
        const std::size_t pc = red.pivots[r];
        for (std::size_t j = 0; j < q; ++j) projection(pc, j) = f.neg(red.reduced(r, free_cols[j]));
    }
    std::vector<Matrix> action;
    action.reserve(m.actions().size());
    for (const Matrix& r : m.actions()) action.push_back(section * r * projection);
    return {RightModule(m.algebra(), std::move(action)), std::move(projection)};
}

Submodule kernel(const RightModule& source, const Matrix& map)
{
    return submodule(source, left_kernel(map));
}

Matrix image(const Matrix& map) { return row_basis(map); }

Quotient cokernel(const RightModule& target, const Matrix& map) { return quotient(target, image(map)); }

// -------------------------------------------------------------------- homs

std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n)
{
    if (m.algebra() != n.algebra()) throw std::invalid_argument("hom between modules over different algebras");
    const std::size_t dm = m.dim();
    const std::size_t dn = n.dim();
    const Field f = m.field();
    if (dm == 0 || dn == 0) return {};
    const std::size_t unknowns = dm * dn;
    Matrix system(0, unknowns, f);
    for (std::size_t g : m.algebra()->generators()) {
        const Matrix& a = m.action(g);
        const Matrix& b = n.action(g);
        Matrix eqs(dm * dn, unknowns, f);
        // (A F - F B)[i][j] = sum_k A[i][k] F[k][j] - sum_l F[i][l] B[l][j]
        for (std::size_t i = 0; i < dm; ++i) {
            for (std::size_t j = 0; j < dn; ++j) {
                const std::size_t row = i * dn + j;
                for (std::size_t k = 0; k < dm; ++k) {
                    if (a(i, k)) eqs(row, k * dn + j) = f.add(eqs(row, k * dn + j), a(i, k));
                }
                for (std::size_t l = 0; l < dn; ++l) {
                    if (b(l, j)) eqs(row, i * dn + l) = f.sub(eqs(row, i * dn + l), b(l, j));
                }
            }
        }
        system = row_basis(vstack(system, eqs));
    }
    std::vector<Matrix> out;
    for (const Matrix& x : nullspace_basis(system)) {
        Matrix h(dm, dn, f);
        for (std::size_t i = 0; i < dm; ++i) {
            for (std::size_t j = 0; j < dn; ++j) h(i, j) = x(i * dn + j, 0);
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::size_t hom_dim(const RightModule& m, const RightModule& n) { return hom_space(m, n).size(); }

bool is_homomorphism(const RightModule& m, const RightModule& n, const Matrix& f)
{
    if (f.rows() != m.dim() || f.cols() != n.dim()) return false;
    for (std::size_t b = 0; b < m.actions().size(); ++b) {
        if (!(m.action(b) * f == f * n.action(b))) return false;
    }
    return true;
}

bool within_cap(std::size_t p, std::size_t exponent, const Limits& limits)
{
    // p^exponent <= 2^cap  <=>  exponent * log2(p) <= cap, done exactly.
    unsigned long long value = 1;
    const unsigned long long bound = limits.end_cap_exp >= 63 ? ~0ULL : (1ULL << limits.end_cap_exp);
    for (std::size_t i = 0; i < exponent; ++i) {
        value *= p;
        if (value > bound) return false;
    }
    return true;
}

std::vector<Matrix> enumerate_span(const std::vector<Matrix>& basis, const Field& field, const Limits& limits)
{
    const std::size_t h = basis.size();
    if (!within_cap(static_cast<std::size_t>(field.p()), h, limits)) {
        throw EnumerationCapExceeded("enumeration cap exceeded: " + std::to_string(field.p()) + "^" +
                                     std::to_string(h) + " elements");
    }
    if (h == 0) return {};
    std::vector<Matrix> out;
    std::vector<Scalar> coeff(h, 0);
    while (true) {
        Matrix acc(basis[0].rows(), basis[0].cols(), field);
        for (std::size_t i = 0; i < h; ++i) {
            if (coeff[i]) acc = acc + basis[i].scaled(coeff[i]);
        }
        out.push_back(std::move(acc));
        std::size_t i = 0;
        while (i < h && ++coeff[i] == field.p()) coeff[i++] = 0;
        if (i == h) break;
    }
    return out;
}

// ----------------------------------------------------- radical structure

namespace {

Matrix radical_span(const RightModule& m)
{
    Matrix span(0, m.dim(), m.field());
    for (std::size_t r : m.algebra()->radical()) span = vstack(span, m.action(r));
    return row_basis(span);
}

}  // namespace

Submodule radical_of_module(const RightModule& m) { return submodule(m, radical_span(m)); }

Quotient top(const RightModule& m) { return quotient(m, radical_span(m)); }

Submodule socle(const RightModule& m)
{
    Matrix stacked(m.dim(), 0, m.field());
    for (std::size_t r : m.algebra()->radical()) stacked = hstack(stacked, m.action(r));
    if (stacked.cols() == 0) return submodule(m, Matrix::identity(m.dim(), m.field()));
    return submodule(m, left_kernel(stacked));
}

ProjectiveCover projective_cover(const RightModule& m)
{
    const AlgebraPtr& alg = m.algebra();
    const Field f = m.field();
    Matrix covered = radical_span(m);
    std::vector<RightModule> parts;
    std::vector<std::size_t> multiplicity(alg->vertex_count(), 0);
    Matrix map(0, m.dim(), f);
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
        const Matrix& ex = m.action(alg->idempotent(x));
        std::vector<std::size_t> from_x;
        for (std::size_t i = 0; i < alg->dim(); ++i) {
            if (alg->element(i).source == x) from_x.push_back(i);
        }
        for (std::size_t r = 0; r < ex.rows(); ++r) {
            const Matrix v = ex.row(r);
            if (v.is_zero() || row_space_contains(covered, v)) continue;
            covered = row_space_sum(covered, v);
            ++multiplicity[x];
            parts.push_back(projective(alg, x));
            for (std::size_t u : from_x) map = vstack(map, v * m.action(u));
        }
    }
    RightModule p = direct_sum(parts, alg);
    if (map.rows() == 0) map = Matrix(0, m.dim(), f);
    return {std::move(p), std::move(map), std::move(multiplicity)};
}

Submodule syzygy(const RightModule& m)
{
    const ProjectiveCover cover = projective_cover(m);
    return kernel(cover.projective, cover.map);
}

bool is_projective(const RightModule& m) { return projective_cover(m).projective.dim() == m.dim(); }

std::optional<std::size_t> pd_up_to(const RightModule& m, std::size_t cap)
{
    RightModule current = m;
    for (std::size_t k = 0; k <= cap; ++k) {
        const ProjectiveCover cover = projective_cover(current);
        if (cover.projective.dim() == current.dim()) return k;
        current = kernel(cover.projective, cover.map).module;
    }
    return std::nullopt;
}

std::size_t ext1_dim(const RightModule& m, const RightModule& n)
{
    const ProjectiveCover cover = projective_cover(m);
    const Submodule omega = kernel(cover.projective, cover.map);
    const std::size_t hom_omega = hom_dim(omega.module, n);
    if (hom_omega == 0) return 0;
    const std::size_t cells = omega.module.dim() * n.dim();
    Matrix restricted(0, cells, m.field());
    for (const Matrix& phi : hom_space(cover.projective, n)) {
        const Matrix r = omega.inclusion * phi;
        Matrix flat(1, cells, m.field());
        for (std::size_t i = 0; i < r.rows(); ++i) {
            for (std::size_t j = 0; j < r.cols(); ++j) flat(0, i * r.cols() + j) = r(i, j);
        }
        restricted = vstack(restricted, flat);
    }
    return hom_omega - rank(restricted);
}

bool is_injective(const RightModule& m)
{
    for (std::size_t x = 0; x < m.algebra()->vertex_count(); ++x) {
        if (ext1_dim(simple(m.algebra(), x), m) != 0) return false;
    }
    return true;
}

// ------------------------------------------------------------------ trace

Submodule trace(const RightModule& p, const RightModule& x)
{
    Matrix span(0, x.dim(), x.field());
    for (const Matrix& h : hom_space(p, x)) span = vstack(span, h);
    return submodule(x, row_basis(span));
}

bool is_generated_by(const RightModule& p, const RightModule& x) { return trace(p, x).module.dim() == x.dim(); }

bool inclusion_splits(const RightModule& x, const Submodule& u)
{
    const std::size_t k = u.module.dim();
    if (k == 0) return true;
    const Field f = x.field();
    const std::vector<Matrix> homs = hom_space(x, u.module);
    Matrix system(k * k, homs.size(), f);
    for (std::size_t c = 0; c < homs.size(); ++c) {
        const Matrix composite = u.inclusion * homs[c];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) system(i * k + j, c) = composite(i, j);
        }
    }
    Matrix rhs(k * k, 1, f);
    for (std::size_t i = 0; i < k; ++i) rhs(i * k + i, 0) = 1;
    return solve_linear(system, rhs).has_value();
}

// ------------------------------------------------------ lattice searches

namespace {

struct BytesLess {
    bool operator()(const Matrix& a, const Matrix& b) const
    {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        return a.data() < b.data();
    }
};

}  // namespace

std::vector<Matrix> submodules_all(const RightModule& m, const Limits& limits)
{
    const std::size_t d = m.dim();
    const Field f = m.field();
    if (!within_cap(static_cast<std::size_t>(f.p()), d, limits)) {
        throw EnumerationCapExceeded("enumeration cap exceeded: module of dimension " + std::to_string(d));
    }
    std::set<Matrix, BytesLess> cyclic;
    Matrix v(1, d, f);
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (std::size_t i = 0; i < d; ++i) t *= static_cast<std::size_t>(f.p());
        return t;
    }();
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            v(0, i) = static_cast<Scalar>(c % static_cast<std::size_t>(f.p()));
            c /= static_cast<std::size_t>(f.p());
        }
        // Only normalized vectors (leading entry 1) are needed: scalars give the same cyclic module.
        std::size_t lead = 0;
        while (lead < d && v(0, lead) == 0) ++lead;
        if (v(0, lead) != 1) continue;
        cyclic.insert(generated_subspace(m, v));
    }
    std::set<Matrix, BytesLess> all;
    all.insert(Matrix(0, d, f));
    std::vector<Matrix> frontier{Matrix(0, d, f)};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const Matrix& u : frontier) {
            for (const Matrix& c : cyclic) {
                Matrix s = row_space_sum(u, c);
                if (all.insert(s).second) next.push_back(std::move(s));
            }
        }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

std::vector<Quotient> quotients_all(const RightModule& m, const Limits& limits)
{
    std::vector<Matrix> subs = submodules_all(m, limits);
    std::stable_sort(subs.begin(), subs.end(), [](const Matrix& a, const Matrix& b) { return a.rows() > b.rows(); });
    std::vector<Quotient> out;
    out.reserve(subs.size());
    for (const Matrix& s : subs) out.push_back(quotient(m, s));
    return out;
}

HereditaryInjectiveResult is_hereditary_injective(const RightModule& m, const Limits& limits)
{
    for (const Quotient& q : quotients_all(m, limits)) {
        if (!is_injective(q.module)) return {false, q.module};
    }
    return {true, std::nullopt};
}

// ------------------------------------------------------- decomposition

namespace {

bool is_nilpotent(const Matrix& f)
{
    Matrix power = f;
    for (std::size_t k = 1; k < f.rows(); k *= 2) power = power * power;
    return power.is_zero();
}

// Fitting decomposition M = Im f^d + Ker f^d, returned as the idempotent
// projecting onto the image. Null when f is nilpotent or invertible.
std::optional<Matrix> fitting_idempotent(const Matrix& f)
{
    const std::size_t d = f.rows();
    if (d == 0 || rank(f) == d || is_nilpotent(f)) return std::nullopt;
    Matrix power = f;
    for (std::size_t k = 1; k < d; k *= 2) power = power * power;
    const Matrix im = row_basis(power);
    const Matrix ker = left_kernel(power);
    const Matrix basis = vstack(im, ker);
    Matrix select(d, d, f.field());
    for (std::size_t i = 0; i < im.rows(); ++i) select(i, i) = 1;
    return *inverse(basis) * select * basis;
}

}  // namespace

std::optional<Matrix> find_nontrivial_idempotent(const RightModule& m, const Limits& limits)
{
    const std::vector<Matrix> basis = hom_space(m, m);
    if (basis.size() <= 1) return std::nullopt;
    // End(M) is local iff every endomorphism is nilpotent or invertible, so
    // one element of neither kind yields a splitting. Try the basis first.
    for (const Matrix& f : basis) {
        if (auto e = fitting_idempotent(f)) return e;
    }
    const Field f = m.field();
    if (!within_cap(static_cast<std::size_t>(f.p()), basis.size(), limits)) {
        throw EnumerationCapExceeded("enumeration cap exceeded - undecidable at configured scale (End of dimension " +
                                     std::to_string(basis.size()) + ")");
    }
    const std::size_t h = basis.size();
    std::vector<Scalar> coeff(h, 0);
    coeff[0] = 1;
    while (true) {
        Matrix x(m.dim(), m.dim(), f);
        for (std::size_t i = 0; i < h; ++i) {
            if (coeff[i]) x = x + basis[i].scaled(coeff[i]);
        }
        if (auto e = fitting_idempotent(x)) return e;
        std::size_t i = 0;
        while (i < h && ++coeff[i] == f.p()) coeff[i++] = 0;
        if (i == h) break;
    }
    return std::nullopt;
}

bool is_indecomposable(const RightModule& m, const Limits& limits)
{
    if (m.is_zero()) return false;
    return !find_nontrivial_idempotent(m, limits).has_value();
}

std::vector<RightModule> decompose(const RightModule& m, const Limits& limits)
{
    if (m.is_zero()) return {};
    const auto e = find_nontrivial_idempotent(m, limits);
    if (!e) return {m};
    const Matrix complement = Matrix::identity(m.dim(), m.field()) - *e;
    std::vector<RightModule> out = decompose(submodule(m, *e).module, limits);
    for (RightModule& part : decompose(submodule(m, complement).module, limits)) out.push_back(std::move(part));
    return out;
}

bool is_iso(const RightModule& m, const RightModule& n, const Limits& limits)
{
    if (m.algebra() != n.algebra() || m.dim_vector() != n.dim_vector()) return false;
    if (m.is_zero()) return true;
    const std::vector<Matrix> basis = hom_space(m, n);
    if (basis.empty()) return false;
    const Field f = m.field();
    for (const Matrix& x : basis) {
        if (rank(x) == m.dim()) return true;
    }
    if (!within_cap(static_cast<std::size_t>(f.p()), basis.size(), limits)) {
        throw EnumerationCapExceeded("enumeration cap exceeded - undecidable at configured scale (Hom of dimension " +
                                     std::to_string(basis.size()) + ")");
    }
    const std::size_t h = basis.size();
    std::vector<Scalar> coeff(h, 0);
    coeff[0] = 1;
    while (true) {
        Matrix x(m.dim(), n.dim(), f);
        for (std::size_t i = 0; i < h; ++i) {
            if (coeff[i]) x = x + basis[i].scaled(coeff[i]);
        }
        if (rank(x) == m.dim()) return true;
        std::size_t i = 0;
        while (i < h && ++coeff[i] == f.p()) coeff[i++] = 0;
        if (i == h) break;
    }
    return false;
}

bool is_iso_indecomposable(const RightModule& m, const RightModule& n)
{
    if (m.algebra() != n.algebra() || m.dim_vector() != n.dim_vector()) return false;
    const std::vector<Matrix> there = hom_space(m, n);
    if (there.empty()) return false;
    const std::vector<Matrix> back = hom_space(n, m);
    for (const Matrix& f : there) {
        for (const Matrix& g : back) {
            if (rank(f * g) == m.dim()) return true;
        }
    }
    return false;
}

}  // namespace tpc
