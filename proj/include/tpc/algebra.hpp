#pragma once

// Bound quiver algebras over GF(p) and their Peirce pieces.
//
// Paths compose left to right: the word a.b traverses a and then b, so
// target(a) == source(b). With this convention e_x A e_y is spanned by the
// paths from x to y and Hom(e_y A, e_x A) = e_x A e_y.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpc/linalg.hpp"

namespace tpc {

struct Arrow {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_count() const { return vertices.size(); }
    /// Throws std::out_of_range for an unknown label.
    std::size_t vertex_index(const std::string& label) const;
    std::optional<std::size_t> find_arrow(const std::string& label) const;
    /// Number of arrows x -> y.
    std::size_t arrow_count(std::size_t x, std::size_t y) const;
    /// Throws std::invalid_argument on duplicate labels or dangling endpoints.
    void validate() const;
};

struct RelationTerm {
    long long coefficient = 1;
    std::vector<std::size_t> path;  // arrow indices, traversed left to right
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct BoundQuiverSpec {
    Field field{2};
    Quiver quiver;
    std::vector<Relation> relations;
};

/// A subset of the vertices of an algebra, stored as a bitmask.
class VertexSubset {
public:
    VertexSubset() = default;
    VertexSubset(std::size_t universe, std::uint32_t mask);
    static VertexSubset all(std::size_t universe);
    static VertexSubset from_members(std::size_t universe, const std::vector<std::size_t>& members);

    std::size_t universe() const { return universe_; }
    std::uint32_t mask() const { return mask_; }
    bool contains(std::size_t v) const { return (mask_ >> v) & 1U; }
    bool empty() const { return mask_ == 0; }
    bool is_all() const { return mask_ == full_mask(); }
    std::size_t size() const;
    std::vector<std::size_t> members() const;
    VertexSubset complement() const { return {universe_, full_mask() & ~mask_}; }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    std::uint32_t full_mask() const { return universe_ >= 32 ? ~0U : ((1U << universe_) - 1U); }

    std::size_t universe_ = 0;
    std::uint32_t mask_ = 0;
};

struct BasisElement {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> word;  // empty for the vertex idempotent at `source`

    bool is_idempotent() const { return word.empty(); }
    std::size_t length() const { return word.size(); }
};

/// One term of a structure-constant expansion.
struct Term {
    std::size_t index = 0;
    Scalar coeff = 0;
};

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A basic finite-dimensional algebra given by a basis of paths and
/// structure constants. Vertex indices are local to the algebra; a corner
/// algebra keeps the labels of the vertices it was cut down to.
class Algebra {
public:
    Algebra(Field field, std::vector<std::string> vertex_labels, std::vector<Arrow> arrows,
            std::vector<BasisElement> basis, std::vector<std::vector<std::vector<Term>>> products);

    const Field& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t vertex_count() const { return vertex_labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::string& vertex_label(std::size_t v) const { return vertex_labels_.at(v); }
    std::optional<std::size_t> find_vertex(const std::string& label) const;

    /// Arrow labels used to spell basis words (the presentation's arrows).
    const std::vector<Arrow>& word_arrows() const { return arrows_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(std::size_t i) const { return basis_.at(i); }
    std::string element_name(std::size_t i) const;

    /// Coordinates of basis_i * basis_j.
    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i][j]; }

    std::size_t idempotent(std::size_t vertex) const { return idempotents_.at(vertex); }
    const std::vector<std::size_t>& radical() const { return radical_; }
    /// Vertex idempotents plus radical elements spanning J/J^2; these
    /// generate the algebra, so module maps only need to commute with them.
    const std::vector<std::size_t>& generators() const { return generators_; }
    /// Smallest N with J^N = 0.
    std::size_t loewy_length() const { return loewy_length_; }

    /// Elements of the basis lying in e_x A e_y.
    std::vector<std::size_t> block(std::size_t x, std::size_t y) const;

    const std::optional<BoundQuiverSpec>& presentation() const { return presentation_; }
    void set_presentation(BoundQuiverSpec spec) { presentation_ = std::move(spec); }

    /// Numerical check of the unit, idempotent and associativity axioms on
    /// every basis triple. Intended for tests.
    bool check_axioms() const;

private:
    Field field_;
    std::vector<std::string> vertex_labels_;
    std::vector<Arrow> arrows_;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<std::vector<Term>>> products_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::size_t> radical_;
    std::vector<std::size_t> generators_;
    std::size_t loewy_length_ = 0;
    std::optional<BoundQuiverSpec> presentation_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct BuildOptions {
    std::size_t path_cap = 512;
};

/// Quotient of the path algebra by the ideal generated by the relations.
/// Throws AlgebraError("non-admissible relations ...") or
/// AlgebraError("infinite dimensional ...").
AlgebraPtr build_algebra(const BoundQuiverSpec& spec, const BuildOptions& options = {});

/// e A e for e = sum of the idempotents in `sigma`. Throws on empty sigma.
AlgebraPtr corner_algebra(const AlgebraPtr& algebra, const VertexSubset& sigma);

/// dim e A (1-e): basis elements leaving sigma.
std::size_t forbidden_corner_dim(const Algebra& algebra, const VertexSubset& sigma);

/// Quiver with dim e_x (J/J^2) e_y arrows x -> y.
Quiver ext_quiver(const Algebra& algebra);

bool is_connected(const Algebra& algebra);
bool is_connected(const Quiver& quiver);
bool is_source(const Quiver& quiver, std::size_t vertex);
bool has_oriented_cycle(const Quiver& quiver);

}  // namespace tpc
