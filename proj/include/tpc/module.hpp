#pragma once

// Finite-dimensional right modules and the homological toolkit on them.
//
// A module stores one matrix per algebra basis element. Vectors are rows and
// the matrix R(b) acts on the right, v -> v R(b), so R(b) R(c) = R(bc).
// A module map f: M -> N is a dim M x dim N matrix F with R_M(b) F = F R_N(b).
// Subspaces are given by a matrix whose rows span them (kept in RREF).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpc/algebra.hpp"
#include "tpc/linalg.hpp"

namespace tpc {

/// Raised when an exhaustive search would exceed the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    /// Exhaustive scans over a space of size p^h run only when p^h <= 2^end_cap_exp.
    std::size_t end_cap_exp = 16;
    std::size_t pd_cap = 8;
};

class RightModule {
public:
    RightModule(AlgebraPtr algebra, std::vector<Matrix> action);
    static RightModule zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    const Matrix& action(std::size_t basis_index) const { return action_.at(basis_index); }
    const std::vector<Matrix>& actions() const { return action_; }
    const std::vector<std::size_t>& dim_vector() const { return dim_vector_; }
    /// Vertices with a nonzero dimension-vector entry.
    VertexSubset support() const;

    /// Full check of the module axioms against the structure constants.
    bool check_axioms() const;

    /// Bytes used for canonical ordering: dimension vector, then generator actions.
    std::vector<Scalar> canonical_bytes() const;

private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
    std::vector<std::size_t> dim_vector_;
};

struct Submodule {
    RightModule module;
    Matrix inclusion;  // rows: basis of the submodule inside the ambient module
};

struct Quotient {
    RightModule module;
    Matrix projection;  // ambient dim x quotient dim
};

// ------------------------------------------------------------ constructors

RightModule simple(const AlgebraPtr& algebra, std::size_t vertex);
/// P_x = e_x A with basis the algebra basis elements starting at x.
RightModule projective(const AlgebraPtr& algebra, std::size_t vertex);
/// I_x = D(A e_x).
RightModule injective(const AlgebraPtr& algebra, std::size_t vertex);
RightModule direct_sum(const RightModule& a, const RightModule& b);
RightModule direct_sum(const std::vector<RightModule>& parts, const AlgebraPtr& algebra);
/// The regular module A_A.
RightModule regular(const AlgebraPtr& algebra);

/// Module of a quiver representation: one dim_vector[s] x dim_vector[t]
/// matrix per arrow of the algebra's presentation. The relations are not
/// checked here.
RightModule from_representation(const AlgebraPtr& algebra, const std::vector<std::size_t>& dim_vector,
                                 const std::vector<Matrix>& arrow_matrices);

/// (1 - e) A e as a right module over e A e, e the idempotent of sigma.
RightModule off_corner_bimodule(const AlgebraPtr& algebra, const VertexSubset& sigma);

// ------------------------------------------------------- sub and quotient

/// Submodule spanned by the rows of `span`; throws if not action-stable.
Submodule submodule(const RightModule& m, const Matrix& span);
Quotient quotient(const RightModule& m, const Matrix& span);
/// Smallest submodule containing the rows of `span`.
Matrix generated_subspace(const RightModule& m, const Matrix& span);

Submodule kernel(const RightModule& source, const Matrix& map);
Matrix image(const Matrix& map);
Quotient cokernel(const RightModule& target, const Matrix& map);

// -------------------------------------------------------------------- homs

std::vector<Matrix> hom_space(const RightModule& m, const RightModule& n);
std::size_t hom_dim(const RightModule& m, const RightModule& n);
bool is_homomorphism(const RightModule& m, const RightModule& n, const Matrix& f);

/// Every linear combination of `basis`, in a fixed order (coefficient vectors
/// counted in base p, first basis element least significant).
std::vector<Matrix> enumerate_span(const std::vector<Matrix>& basis, const Field& field, const Limits& limits);
bool within_cap(std::size_t p, std::size_t exponent, const Limits& limits);

// ----------------------------------------------------- radical structure

Submodule radical_of_module(const RightModule& m);
Quotient top(const RightModule& m);
Submodule socle(const RightModule& m);

struct ProjectiveCover {
    RightModule projective;
    Matrix map;                          // projective -> module, surjective
    std::vector<std::size_t> multiplicity;  // copies of P_x per vertex
};

ProjectiveCover projective_cover(const RightModule& m);
Submodule syzygy(const RightModule& m);
bool is_projective(const RightModule& m);

/// Projective dimension if it is at most `cap`; nullopt means "> cap".
std::optional<std::size_t> pd_up_to(const RightModule& m, std::size_t cap);

std::size_t ext1_dim(const RightModule& m, const RightModule& n);
bool is_injective(const RightModule& m);

// ------------------------------------------------------------------ trace

/// Sum of the images of all maps P -> X, with its inclusion into X.
Submodule trace(const RightModule& p, const RightModule& x);
bool is_generated_by(const RightModule& p, const RightModule& x);

/// True iff the inclusion of `u` into `x` admits a retraction.
bool inclusion_splits(const RightModule& x, const Submodule& u);

// ------------------------------------------------------ lattice searches

/// All submodules as canonical row bases, ordered by dimension then bytes.
std::vector<Matrix> submodules_all(const RightModule& m, const Limits& limits = {});
/// Quotients by every submodule, smallest quotient first.
std::vector<Quotient> quotients_all(const RightModule& m, const Limits& limits = {});

struct HereditaryInjectiveResult {
    bool value = true;
    std::optional<RightModule> witness;  // a non-injective quotient
};

HereditaryInjectiveResult is_hereditary_injective(const RightModule& m, const Limits& limits = {});

// ------------------------------------------------------- decomposition

/// A nontrivial idempotent endomorphism, if any (exhaustive over End(M)).
std::optional<Matrix> find_nontrivial_idempotent(const RightModule& m, const Limits& limits = {});
bool is_indecomposable(const RightModule& m, const Limits& limits = {});
std::vector<RightModule> decompose(const RightModule& m, const Limits& limits = {});
bool is_iso(const RightModule& m, const RightModule& n, const Limits& limits = {});
/// Isomorphism test valid when both modules are indecomposable: their
/// endomorphism rings are local, so an isomorphism exists iff g f is
/// invertible for some pair of hom-space basis elements.
bool is_iso_indecomposable(const RightModule& m, const RightModule& n);

std::string dim_vector_string(const RightModule& m);

}  // namespace tpc
