#include "tpc/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <functional>
#include <map>
#include <tuple>

namespace tpc {

namespace {

Matrix multiply(const Algebra& alg, const Matrix& x, const Matrix& y)
{
    Matrix out(1, alg.dim(), alg.field());
    const Field& f = alg.field();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (!x(0, i)) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (!y(0, j)) continue;
            const Scalar c = f.mul(x(0, i), y(0, j));
            for (const Term& t : alg.product(i, j)) out(0, t.index) = f.add(out(0, t.index), f.mul(c, t.coeff));
        }
    }
    return out;
}

struct Word {
    std::vector<std::size_t> letters;  // positions in the generator list
    Matrix vector;
};

}  // namespace

GeneratorPresentation generator_presentation(const AlgebraPtr& algebra)
{
    const Algebra& alg = *algebra;
    const Field f = alg.field();
    GeneratorPresentation out;
    out.algebra = algebra;
    for (std::size_t g : alg.generators()) {
        if (!alg.element(g).is_idempotent()) out.generators.push_back(g);
    }
    const std::size_t n = alg.vertex_count();

    // Words grouped by Peirce block; zero words are kept but never extended.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> blocks;
    std::vector<Word> frontier;
    for (std::size_t k = 0; k < out.generators.size(); ++k) {
        frontier.push_back({{k}, Matrix::unit_row(alg.dim(), out.generators[k], f)});
    }
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (Word& w : frontier) {
            const BasisElement& first = alg.element(out.generators[w.letters.front()]);
            const BasisElement& last = alg.element(out.generators[w.letters.back()]);
            if (!w.vector.is_zero()) {
                for (std::size_t k = 0; k < out.generators.size(); ++k) {
                    const std::size_t g = out.generators[k];
                    if (alg.element(g).source != last.target) continue;
                    Word longer{w.letters, multiply(alg, w.vector, Matrix::unit_row(alg.dim(), g, f))};
                    longer.letters.push_back(k);
                    next.push_back(std::move(longer));
                }
            }
            blocks[{first.source, last.target}].push_back(std::move(w));
        }
        frontier = std::move(next);
    }

    out.expressions.resize(alg.dim());
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto it = blocks.find({x, y});
            const std::vector<Word> empty;
            const std::vector<Word>& words = it == blocks.end() ? empty : it->second;
            Matrix all(0, alg.dim(), f);
            Matrix long_words(0, alg.dim(), f);
            std::vector<const Word*> long_list;
            for (const Word& w : words) {
                all = vstack(all, w.vector);
                if (w.letters.size() >= 2) {
                    long_words = vstack(long_words, w.vector);
                    long_list.push_back(&w);
                }
            }
            for (std::size_t b : alg.block(x, y)) {
                if (alg.element(b).is_idempotent()) continue;
                const auto coeff = solve_linear(all.transpose(), Matrix::unit_row(alg.dim(), b, f).transpose());
                if (!coeff) throw AlgebraError("radical generators do not span the algebra");
                for (std::size_t k = 0; k < words.size(); ++k) {
                    if ((*coeff)(k, 0)) out.expressions[b].terms.emplace_back((*coeff)(k, 0), words[k].letters);
                }
            }
            if (long_list.empty()) continue;
            const Matrix kernel = left_kernel(long_words);
            for (std::size_t r = 0; r < kernel.rows(); ++r) {
                GeneratorWordSum rel;
                for (std::size_t k = 0; k < long_list.size(); ++k) {
                    if (kernel(r, k)) rel.terms.emplace_back(kernel(r, k), long_list[k]->letters);
                }
                out.relations.push_back(std::move(rel));
            }
        }
    }
    return out;
}

namespace {

Matrix evaluate(const std::vector<Matrix>& matrices, const GeneratorWordSum& sum, std::size_t rows, std::size_t cols,
                Field f)
{
    Matrix acc(rows, cols, f);
    for (const auto& [c, letters] : sum.terms) {
        Matrix m = matrices[letters.front()];
        for (std::size_t i = 1; i < letters.size(); ++i) m = m * matrices[letters[i]];
        acc = acc + m.scaled(c);
    }
    return acc;
}

}  // namespace

RightModule module_from_generators(const GeneratorPresentation& pres, const std::vector<std::size_t>& dim_vector,
                                   const std::vector<Matrix>& matrices)
{
    const Algebra& alg = *pres.algebra;
    const Field f = alg.field();
    const std::size_t n = alg.vertex_count();
    if (dim_vector.size() != n) throw std::invalid_argument("dimension vector length mismatch");
    if (matrices.size() != pres.generators.size()) throw std::invalid_argument("one matrix per generator required");
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + dim_vector[v];
    const std::size_t d = offset[n];
    std::vector<Matrix> action;
    action.reserve(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        const BasisElement& b = alg.element(i);
        Matrix m(d, d, f);
        if (b.is_idempotent()) {
            for (std::size_t k = offset[b.source]; k < offset[b.source + 1]; ++k) m(k, k) = 1;
        } else if (dim_vector[b.source] && dim_vector[b.target]) {
            const Matrix block =
                evaluate(matrices, pres.expressions[i], dim_vector[b.source], dim_vector[b.target], f);
            for (std::size_t r = 0; r < block.rows(); ++r) {
                for (std::size_t c = 0; c < block.cols(); ++c) m(offset[b.source] + r, offset[b.target] + c) = block(r, c);
            }
        }
        action.push_back(std::move(m));
    }
    return {pres.algebra, std::move(action)};
}

// ------------------------------------------------------------- enumeration

namespace {

struct Invariants {
    std::vector<std::size_t> dim_vector;
    std::size_t end_dim;
    std::vector<std::size_t> top;
    std::vector<std::size_t> socle;

    friend bool operator<(const Invariants& a, const Invariants& b)
    {
        return std::tie(a.dim_vector, a.end_dim, a.top, a.socle) < std::tie(b.dim_vector, b.end_dim, b.top, b.socle);
    }
};

Invariants invariants_of(const RightModule& m)
{
    return {m.dim_vector(), hom_dim(m, m), top(m).module.dim_vector(), socle(m).module.dim_vector()};
}

bool support_connected(const GeneratorPresentation& pres, const std::vector<std::size_t>& dims)
{
    const Algebra& alg = *pres.algebra;
    const std::size_t n = alg.vertex_count();
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v) {
        if (dims[v]) members.push_back(v);
    }
    if (members.empty()) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{members.front()};
    seen[members.front()] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t g : pres.generators) {
            const BasisElement& b = alg.element(g);
            std::size_t other = n;
            if (b.source == v) other = b.target;
            if (b.target == v) other = b.source;
            if (other < n && dims[other] && !seen[other]) {
                seen[other] = true;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(members.begin(), members.end(), [&](std::size_t v) { return seen[v]; });
}

Matrix matrix_from_code(std::size_t rows, std::size_t cols, Field f, std::size_t code)
{
    Matrix m(rows, cols, f);
    const auto p = static_cast<std::size_t>(f.p());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = static_cast<Scalar>(code % p);
            code /= p;
        }
    }
    return m;
}

std::string dims_string(const std::vector<std::size_t>& dims)
{
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + ")";
}

// Base change. GL(V_v) acts on every generator touching v, so a generator
// can be normalized with the groups of vertices no earlier step used: both
// ends free gives rank normal form, one end free gives an echelon form on
// that side, and a loop at a free vertex (nilpotent, being radical) gives a
// Jordan form.
enum class FormKind { Free, Rank, RowEchelon, ColumnEchelon, Jordan };

struct PlanStep {
    std::size_t generator = 0;
    FormKind kind = FormKind::Free;
    unsigned long long choices = 1;
};

struct SearchPlan {
    std::vector<PlanStep> steps;
    unsigned long long volume = 1;
};

constexpr unsigned long long kHuge = ~0ULL / 4;

unsigned long long capped_mul(unsigned long long a, unsigned long long b)
{
    if (a && b > kHuge / a) return kHuge;
    return a * b;
}

unsigned long long power(unsigned long long p, std::size_t e)
{
    unsigned long long out = 1;
    for (std::size_t i = 0; i < e; ++i) out = capped_mul(out, p);
    return out;
}

/// Number of r-dimensional subspaces of F_p^n.
unsigned long long gaussian_binomial(std::size_t n, std::size_t r, unsigned long long p)
{
    unsigned long long num = 1;
    unsigned long long den = 1;
    for (std::size_t i = 0; i < r; ++i) {
        num = capped_mul(num, power(p, n - i) - 1);
        den = capped_mul(den, power(p, i + 1) - 1);
        if (num == kHuge || den == kHuge) return kHuge;
    }
    return num / den;
}

/// Reduced row echelon matrices of the given shape, every rank.
unsigned long long echelon_count(std::size_t rows, std::size_t cols, unsigned long long p)
{
    unsigned long long total = 0;
    for (std::size_t r = 0; r <= std::min(rows, cols); ++r) total = std::min(kHuge, total + gaussian_binomial(cols, r, p));
    return total;
}

unsigned long long partition_count(std::size_t n)
{
    std::vector<unsigned long long> ways(n + 1, 0);
    ways[0] = 1;
    for (std::size_t part = 1; part <= n; ++part) {
        for (std::size_t m = part; m <= n; ++m) ways[m] += ways[m - part];
    }
    return ways[n];
}

unsigned long long form_count(FormKind kind, std::size_t rows, std::size_t cols, unsigned long long p)
{
    switch (kind) {
    case FormKind::Rank: return std::min(rows, cols) + 1;
    case FormKind::RowEchelon: return echelon_count(rows, cols, p);
    case FormKind::ColumnEchelon: return echelon_count(cols, rows, p);
    case FormKind::Jordan: return partition_count(rows);
    case FormKind::Free: break;
    }
    return power(p, rows * cols);
}

std::vector<Matrix> echelon_forms(std::size_t rows, std::size_t cols, Field f)
{
    const auto p = static_cast<std::size_t>(f.p());
    std::vector<Matrix> out;
    for (std::uint32_t mask = 0; mask < (1U << cols); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t j = 0; j < cols; ++j) {
            if ((mask >> j) & 1U) piv.push_back(j);
        }
        if (piv.size() > rows) continue;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < piv.size(); ++r) {
            for (std::size_t j = piv[r] + 1; j < cols; ++j) {
                if (!((mask >> j) & 1U)) free.emplace_back(r, j);
            }
        }
        std::size_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= p;
        for (std::size_t code = 0; code < total; ++code) {
            Matrix m(rows, cols, f);
            for (std::size_t r = 0; r < piv.size(); ++r) m(r, piv[r]) = 1;
            std::size_t c = code;
            for (const auto& [r, j] : free) {
                m(r, j) = static_cast<Scalar>(c % p);
                c /= p;
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

void partitions(std::size_t n, std::size_t largest, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out)
{
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t part = std::min(n, largest); part >= 1; --part) {
        current.push_back(part);
        partitions(n - part, part, current, out);
        current.pop_back();
    }
}

std::vector<Matrix> normal_forms(FormKind kind, std::size_t rows, std::size_t cols, Field f)
{
    std::vector<Matrix> out;
    switch (kind) {
    case FormKind::Free: break;
    case FormKind::Rank:
        for (std::size_t r = 0; r <= std::min(rows, cols); ++r) {
            Matrix m(rows, cols, f);
            for (std::size_t d = 0; d < r; ++d) m(d, d) = 1;
            out.push_back(std::move(m));
        }
        break;
    case FormKind::RowEchelon: out = echelon_forms(rows, cols, f); break;
    case FormKind::ColumnEchelon:
        for (const Matrix& m : echelon_forms(cols, rows, f)) out.push_back(m.transpose());
        break;
    case FormKind::Jordan: {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> current;
        partitions(rows, rows, current, parts);
        for (const auto& blocks : parts) {
            Matrix m(rows, rows, f);
            std::size_t at = 0;
            for (std::size_t b : blocks) {
                for (std::size_t i = 0; i + 1 < b; ++i) m(at + i, at + i + 1) = 1;
                at += b;
            }
            out.push_back(std::move(m));
        }
        break;
    }
    }
    return out;
}

/// Greedy plan started from `first`, then largest generators first.
SearchPlan plan_from(std::size_t first, const std::vector<std::size_t>& live, const std::vector<std::size_t>& src,
                     const std::vector<std::size_t>& tgt, const std::vector<std::size_t>& dims, unsigned long long p)
{
    std::vector<std::size_t> rest;
    for (std::size_t k : live) {
        if (k != first) rest.push_back(k);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
        return dims[src[a]] * dims[tgt[a]] > dims[src[b]] * dims[tgt[b]];
    });
    rest.insert(rest.begin(), first);

    SearchPlan plan;
    std::vector<bool> used(dims.size(), false);
    for (std::size_t k : rest) {
        const std::size_t s = src[k];
        const std::size_t t = tgt[k];
        FormKind kind = FormKind::Free;
        if (s == t) {
            if (!used[s]) kind = FormKind::Jordan;
        } else if (!used[s] && !used[t]) {
            kind = FormKind::Rank;
        } else if (!used[s]) {
            kind = FormKind::RowEchelon;
        } else if (!used[t]) {
            kind = FormKind::ColumnEchelon;
        }
        if (kind != FormKind::Free) used[s] = used[t] = true;
        const unsigned long long c = form_count(kind, dims[s], dims[t], p);
        plan.steps.push_back({k, kind, c});
        plan.volume = capped_mul(plan.volume, c);
    }
    // Normalized generators first: they have the fewest choices.
    std::stable_partition(plan.steps.begin(), plan.steps.end(),
                          [](const PlanStep& step) { return step.kind != FormKind::Free; });
    return plan;
}

SearchPlan choose_plan(const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt,
                       const std::vector<std::size_t>& dims, unsigned long long p)
{
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (dims[src[k]] && dims[tgt[k]]) live.push_back(k);
    }
    if (live.empty()) return {};
    std::optional<SearchPlan> best;
    for (std::size_t first : live) {
        SearchPlan plan = plan_from(first, live, src, tgt, dims, p);
        if (!best || plan.volume < best->volume) best = std::move(plan);
    }
    return *best;
}

std::vector<RightModule> indecomposables_with_dims(const GeneratorPresentation& pres,
                                                   const std::vector<std::size_t>& dims,
                                                   const CatalogOptions& options)
{
    const Algebra& alg = *pres.algebra;
    const Field f = alg.field();
    const std::size_t p = static_cast<std::size_t>(f.p());
    const std::size_t gcount = pres.generators.size();

    std::vector<std::size_t> src(gcount), tgt(gcount);
    for (std::size_t k = 0; k < gcount; ++k) {
        src[k] = alg.element(pres.generators[k]).source;
        tgt[k] = alg.element(pres.generators[k]).target;
    }

    const SearchPlan plan = choose_plan(src, tgt, dims, p);
    if (plan.volume > options.search_budget) {
        throw SearchBudgetExceeded("search budget exceeded for dimension vector " + dims_string(dims));
    }
    std::vector<std::size_t> order;
    std::vector<std::vector<Matrix>> forms;  // empty for free generators
    std::vector<std::size_t> choices;
    for (const PlanStep& step : plan.steps) {
        const std::size_t k = step.generator;
        order.push_back(k);
        forms.push_back(normal_forms(step.kind, dims[src[k]], dims[tgt[k]], f));
        choices.push_back(step.kind == FormKind::Free ? static_cast<std::size_t>(step.choices) : forms.back().size());
    }

    // Relations are checked as soon as every generator they mention is set.
    std::vector<std::size_t> position(gcount, gcount);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::vector<std::vector<std::size_t>> ready(order.size());
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        const GeneratorWordSum& rel = pres.relations[r];
        const auto& first = rel.terms.front().second;
        if (!dims[src[first.front()]] || !dims[tgt[first.back()]]) continue;
        std::optional<std::size_t> last;
        for (const auto& [c, letters] : rel.terms) {
            bool live = true;
            std::size_t at = 0;
            for (std::size_t k : letters) {
                if (position[k] == gcount) live = false;
                else at = std::max(at, position[k]);
            }
            if (live) last = std::max(last.value_or(0), at);
        }
        if (last) ready[*last].push_back(r);
    }

    std::vector<Matrix> matrices(gcount);
    for (std::size_t k = 0; k < gcount; ++k) matrices[k] = Matrix(dims[src[k]], dims[tgt[k]], f);

    std::vector<RightModule> found;
    std::map<Invariants, std::vector<std::size_t>> buckets;

    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == order.size()) {
            RightModule m = module_from_generators(pres, dims, matrices);
            if (!is_indecomposable(m, options.limits)) return;
            Invariants inv = invariants_of(m);
            auto& bucket = buckets[inv];
            for (std::size_t j : bucket) {
                if (is_iso_indecomposable(found[j], m)) return;
            }
            bucket.push_back(found.size());
            found.push_back(std::move(m));
            return;
        }
        const std::size_t k = order[i];
        for (std::size_t code = 0; code < choices[i]; ++code) {
            matrices[k] = forms[i].empty() ? matrix_from_code(dims[src[k]], dims[tgt[k]], f, code) : forms[i][code];
            bool ok = true;
            for (std::size_t r : ready[i]) {
                const GeneratorWordSum& rel = pres.relations[r];
                const auto& first = rel.terms.front().second;
                if (!evaluate(matrices, rel, dims[src[first.front()]], dims[tgt[first.back()]], f).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign(i + 1);
        }
    };
    assign(0);

    std::sort(found.begin(), found.end(),
              [](const RightModule& a, const RightModule& b) { return a.canonical_bytes() < b.canonical_bytes(); });
    return found;
}

void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out)
{
    if (current.size() + 1 == parts) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (std::size_t k = 0; k <= total; ++k) {
        current.push_back(k);
        compositions(total - k, parts, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<RightModule> indecomposables_of_dimension(const AlgebraPtr& algebra, std::size_t total,
                                                      const CatalogOptions& options)
{
    const GeneratorPresentation pres = generator_presentation(algebra);
    std::vector<std::vector<std::size_t>> dim_vectors;
    std::vector<std::size_t> current;
    if (total == 0) return {};
    compositions(total, algebra->vertex_count(), current, dim_vectors);
    std::sort(dim_vectors.begin(), dim_vectors.end());
    std::vector<RightModule> out;
    for (const auto& dims : dim_vectors) {
        if (!support_connected(pres, dims)) continue;
        for (RightModule& m : indecomposables_with_dims(pres, dims, options)) out.push_back(std::move(m));
    }
    return out;
}

IndecompCatalog enumerate_catalog(const AlgebraPtr& algebra, const CatalogOptions& options)
{
    IndecompCatalog cat;
    cat.algebra = algebra;
    cat.max_dim = options.max_dim;
    cat.complete = options.assume_complete;
    for (std::size_t total = 1; total <= options.max_dim; ++total) {
        for (RightModule& m : indecomposables_of_dimension(algebra, total, options)) cat.entries.push_back(std::move(m));
    }
    const std::size_t n = cat.entries.size();
    cat.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
    cat.reach.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cat.hom_dims[i][j] = hom_dim(cat.entries[i], cat.entries[j]);
            cat.reach[i][j] = i == j || cat.hom_dims[i][j] > 0;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!cat.reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (cat.reach[k][j]) cat.reach[i][j] = true;
            }
        }
    }
    cat.projective_of.assign(n, std::nullopt);
    cat.simple_of.assign(n, std::nullopt);
    cat.injective_of.assign(n, std::nullopt);
    for (std::size_t x = 0; x < algebra->vertex_count(); ++x) {
        if (auto i = cat.find(projective(algebra, x))) cat.projective_of[*i] = x;
        if (auto i = cat.find(simple(algebra, x))) cat.simple_of[*i] = x;
        if (auto i = cat.find(injective(algebra, x))) cat.injective_of[*i] = x;
    }
    return cat;
}

std::optional<std::size_t> IndecompCatalog::find(const RightModule& m) const
{
    if (m.dim() > max_dim) return std::nullopt;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].dim_vector() == m.dim_vector() && is_iso_indecomposable(entries[i], m)) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> IndecompCatalog::projective_entry(std::size_t vertex) const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (projective_of[i] == vertex) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> IndecompCatalog::simple_entry(std::size_t vertex) const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (simple_of[i] == vertex) return i;
    }
    return std::nullopt;
}

std::string IndecompCatalog::name(std::size_t entry) const
{
    std::string out;
    const auto add = [&](const char* prefix, const std::optional<std::size_t>& v) {
        if (v) out += (out.empty() ? "" : "=") + std::string(prefix) + algebra->vertex_label(*v);
    };
    add("P", projective_of[entry]);
    add("S", simple_of[entry]);
    add("I", injective_of[entry]);
    if (out.empty()) out = "X" + std::to_string(entry) + dim_vector_string(entries[entry]);
    return out;
}

Subcategory IndecompCatalog::all() const
{
    Subcategory out(entries.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

bool contains(const Subcategory& c, std::size_t entry) { return std::binary_search(c.begin(), c.end(), entry); }

Subcategory complement(const IndecompCatalog& catalog, const Subcategory& c)
{
    Subcategory out;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (!contains(c, i)) out.push_back(i);
    }
    return out;
}

Subcategory predecessors_of(const IndecompCatalog& catalog, const Subcategory& targets)
{
    Subcategory out;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t t : targets) {
            if (catalog.reach[i][t]) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

ClosureResult is_predecessor_closed(const IndecompCatalog& catalog, const Subcategory& c)
{
    for (std::size_t y : c) {
        for (std::size_t x = 0; x < catalog.size(); ++x) {
            if (!contains(c, x) && catalog.hom_dims[x][y] > 0) return {false, std::make_pair(x, y)};
        }
    }
    return {};
}

SupportingProjective supporting_projective(const IndecompCatalog& catalog, const Subcategory& c)
{
    const AlgebraPtr& alg = catalog.algebra;
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
        const auto entry = catalog.projective_entry(x);
        bool in = false;
        if (entry) {
            in = contains(c, *entry);
        } else {
            in = std::any_of(c.begin(), c.end(), [&](std::size_t i) { return catalog.entries[i].dim_vector()[x] > 0; });
        }
        if (in) members.push_back(x);
    }
    std::vector<RightModule> parts;
    for (std::size_t x : members) parts.push_back(projective(alg, x));
    return {VertexSubset::from_members(alg->vertex_count(), members), direct_sum(parts, alg)};
}

std::string describe(const IndecompCatalog& catalog, const Subcategory& c)
{
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + catalog.name(c[i]);
    return out + "}";
}

}  // namespace tpc
