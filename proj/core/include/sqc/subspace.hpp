#pragma once

#include <vector>

#include "sqc/matrix.hpp"

namespace sqc {

/// Linear subspace of F^n held by its canonical reduced-row-echelon basis, so
/// equal subspaces compare equal representation-wise.
class Subspace {
public:
    /// The zero subspace of F^ambient_dim.
    explicit Subspace(std::size_t ambient_dim)
        : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the rows of `generators` (need not be independent).
    static Subspace span(const Matrix& generators);
    static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& generators);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Scalar> basis_vector(std::size_t i) const;

    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_dim_;
    Matrix basis_;
};

/// a + b. Throws dimension_mismatch on different ambient dimensions.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// a ∩ b via the Zassenhaus block elimination.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Whether v lies in the subspace.
bool subspace_contains(const Subspace& s, const std::vector<Scalar>& v);

/// Whether every row of `vs` lies in the subspace.
bool subspace_contains_all(const Subspace& s, const Matrix& vs);

/// {v : m·v = 0}, dimension cols − rank.
Subspace kernel(const Matrix& m);

} // namespace sqc
