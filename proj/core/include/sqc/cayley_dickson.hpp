#pragma once

#include <array>

#include "sqc/algebra.hpp"
#include "sqc/matrix.hpp"
#include "sqc/scalar.hpp"

namespace sqc {

/// Element b1 + s*b2 of the doubled algebra CD(B, mu), where B = F^4 carries
/// the componentwise product. Addition is componentwise; t(b) is the sum of
/// the four coordinates of b.
struct CDElem {
    std::array<Scalar, 4> b1{};
    std::array<Scalar, 4> b2{};

    bool operator==(const CDElem&) const = default;

    bool is_zero() const;

    /// Flattens to (b1[0..3], b2[0..3]).
    std::array<Scalar, 8> coords() const;
    static CDElem from_coords(const std::array<Scalar, 8>& c);

    /// Basis element with index 0..3 -> unit vectors of B, 4..7 -> s times
    /// the unit vectors of B.
    static CDElem basis_vector(std::size_t idx);
};

CDElem operator+(const CDElem& a, const CDElem& b);
CDElem operator-(const CDElem& a, const CDElem& b);
CDElem operator*(const Scalar& c, const CDElem& a);

/// b -> -b + (1/2) t(b) 1, the order-2 map of B used by the doubling product.
std::array<Scalar, 4> theta(const std::array<Scalar, 4>& b);

/// Doubling product on CD(B, mu):
///   (b1 + s b2)(b3 + s b4)
///     = (b1 b3 + mu (b2 b4^theta)^theta) + s (b1^theta b4 + (b2^theta b3^theta)^theta).
CDElem cd_multiply(const CDElem& x, const CDElem& y, const Scalar& mu);

/// Involution of CD(B, mu): b1 + s b2 -> b1 - s b2^theta.
CDElem cd_involute(const CDElem& x);

using CDTable = std::array<std::array<CDElem, 8>, 8>;

/// Full structure-constant table of CD(B, mu) on the basis
/// {u0..u3, s u0..s u3}: entry (i, j) is basis_vector(i) * basis_vector(j).
/// Throws zero_mu when mu = 0 (the doubling needs an invertible parameter).
CDTable cd_construct(const Scalar& mu);

/// The defining K-module basis vectors of B: index 0 -> (1,1,1,1) (the unit),
/// 1..3 -> the sign patterns (1,1,-1,-1), (1,-1,1,-1), (1,-1,-1,1).
std::array<Scalar, 4> cd_defining_vector(std::size_t i);

/// Rewrites an element of the K-module presentation as a CD(B, 1) element:
/// the K coordinate Alpha + Beta*s of 1 maps to (Alpha 1_B, Beta 1_B), and
/// the coordinate of x_i maps through the module action x_i * s = (0, -x_i).
CDElem to_cd(const AlgElem& a);

/// Inverse of to_cd, using the orthogonality of the defining vectors.
AlgElem from_cd(const CDElem& c);

/// The linear map CD(B, mu) -> CD(B, 1) given by b1 + s b2 -> b1 + sqrt_mu s b2,
/// as an 8x8 matrix in the CD basis. Throws invalid_root when sqrt_mu^2 != mu.
Matrix cd_isomorphism(const Scalar& mu, const Scalar& sqrt_mu);

} // namespace sqc
