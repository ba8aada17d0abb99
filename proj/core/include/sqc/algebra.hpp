#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sqc/kelem.hpp"
#include "sqc/subspace.hpp"

namespace sqc {

/// Element of the split quartic Cayley algebra A, an 8-dimensional unital
/// algebra with involution, written over the K-module basis {1, x₁, x₂, x₃}:
/// a = k0·1 + k1·x₁ + k2·x₂ + k3·x₃ with kᵢ ∈ K.
///
/// The product extends bilinearly from
///   (f1)(g1) = (fg)1          (gxᵢ)(f1) = (fg)xᵢ      (f1)(gxᵢ) = (ex(f)g)xᵢ
///   (fxᵢ)(gxᵢ) = (ex(f)·g)1   (fxᵢ)(gxⱼ) = ex(fg)x_k  for {i,j,k} = {1,2,3},
/// and the involution applies ex to k0 and fixes k1, k2, k3.
///
/// The canonical F-basis, used for all matrices and coordinate vectors, is
/// (e₊, e₋, e₊x₁, e₋x₁, e₊x₂, e₋x₂, e₊x₃, e₋x₃): coordinates are
/// (k0.left, k0.right, k1.left, k1.right, k2.left, k2.right, k3.left, k3.right).
struct AlgElem {
    std::array<KElem, 4> k{KElem::zero(), KElem::zero(), KElem::zero(), KElem::zero()};

    bool operator==(const AlgElem&) const = default;
    bool is_zero() const;

    static AlgElem zero() { return {}; }
    static AlgElem one();
    static AlgElem s();
    /// The module basis element xᵢ, i ∈ {1,2,3}.
    static AlgElem x(std::size_t i);
    /// Canonical F-basis vector by index 0..7.
    static AlgElem basis_vector(std::size_t idx);

    std::array<Scalar, 8> coords() const;
    static AlgElem from_coords(const std::array<Scalar, 8>& c);
    static AlgElem from_coords(const std::vector<Scalar>& c);
    std::vector<Scalar> coord_vector() const;
};

inline AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    return {{a.k[0] + b.k[0], a.k[1] + b.k[1], a.k[2] + b.k[2], a.k[3] + b.k[3]}};
}
inline AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    return {{a.k[0] - b.k[0], a.k[1] - b.k[1], a.k[2] - b.k[2], a.k[3] - b.k[3]}};
}
inline AlgElem operator-(const AlgElem& a) {
    return {{-a.k[0], -a.k[1], -a.k[2], -a.k[3]}};
}
/// Scalar action of F.
inline AlgElem operator*(const Scalar& c, const AlgElem& a) {
    return {{c * a.k[0], c * a.k[1], c * a.k[2], c * a.k[3]}};
}
/// K-module action: multiplies every coordinate by g.
inline AlgElem k_scale(const KElem& g, const AlgElem& a) {
    return {{g * a.k[0], g * a.k[1], g * a.k[2], g * a.k[3]}};
}

/// The algebra product.
AlgElem alg_multiply(const AlgElem& a, const AlgElem& b);
inline AlgElem operator*(const AlgElem& a, const AlgElem& b) { return alg_multiply(a, b); }

/// The involution: ex on k0, identity on k1, k2, k3.
AlgElem alg_involute(const AlgElem& a);

/// Decomposition of a product of two elements of M along F1 ⊕ Fs ⊕ M.
struct BilinearParts {
    Scalar b;       ///< coefficient of 1
    Scalar lambda;  ///< coefficient of s
    AlgElem m;      ///< component in M
};

/// xy = b·1 + λ·s + m for x, y ∈ M. Throws not_in_m when k0 ≠ 0.
BilinearParts bilinear_b(const AlgElem& x, const AlgElem& y);

/// Distinguished subspaces in the canonical coordinates.
enum class CanonicalSpace { S, H, M, Mplus, Mminus, K, Kx1, Kx2, Kx3 };

/// Echelon basis of the named subspace: S = Fs; H = F1 ⊕ M; M = ⊕Kxᵢ;
/// M± the ±1 eigenspaces of left multiplication by s on M; K = F1 ⊕ Fs.
Subspace canonical_subspace(CanonicalSpace name);

/// 6×6 Gram matrix of b on M over the basis (e₊x₁, e₋x₁, …, e₋x₃).
Matrix bilinear_gram();

} // namespace sqc
