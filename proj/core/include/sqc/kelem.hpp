#pragma once

#include "sqc/scalar.hpp"

namespace sqc {

/// Element of the 2-dimensional split subalgebra K ≅ F×F, stored in the
/// idempotent coordinates: k = left·e₊ + right·e₋, where e± = ½(1±s).
/// Under this identification 1 = (1,1) and s = (1,−1); products are
/// componentwise and the exchange involution swaps the components.
struct KElem {
    Scalar left;
    Scalar right;

    bool operator==(const KElem&) const = default;

    bool is_zero() const { return left.is_zero() && right.is_zero(); }
    /// Invertible in K means both components are nonzero.
    bool is_invertible() const { return !left.is_zero() && !right.is_zero(); }

    static KElem zero() { return {Scalar(0), Scalar(0)}; }
    static KElem one() { return {Scalar(1), Scalar(1)}; }
    static KElem s() { return {Scalar(1), Scalar(-1)}; }
    static KElem e_plus() { return {Scalar(1), Scalar(0)}; }
    static KElem e_minus() { return {Scalar(0), Scalar(1)}; }
    /// Embedding of F along the unit: c ↦ c·1.
    static KElem from_scalar(const Scalar& c) { return {c, c}; }
};

inline KElem k_multiply(const KElem& a, const KElem& b) {
    return {a.left * b.left, a.right * b.right};
}
inline KElem operator*(const KElem& a, const KElem& b) { return k_multiply(a, b); }
inline KElem operator+(const KElem& a, const KElem& b) { return {a.left + b.left, a.right + b.right}; }
inline KElem operator-(const KElem& a, const KElem& b) { return {a.left - b.left, a.right - b.right}; }
inline KElem operator-(const KElem& a) { return {-a.left, -a.right}; }
inline KElem operator*(const Scalar& c, const KElem& a) { return {c * a.left, c * a.right}; }

/// The exchange involution (x,y) ↦ (y,x); sends s to −s.
inline KElem k_exchange(const KElem& a) { return {a.right, a.left}; }

/// Componentwise inverse; throws division_by_zero unless is_invertible().
inline KElem k_inverse(const KElem& a) {
    return {scalar_inv(a.left), scalar_inv(a.right)};
}

/// Membership in S¹ = {r : r·ex(r) = 1}, i.e. left·right = 1.
inline bool k_in_s1(const KElem& a) { return a.left * a.right == Scalar(1); }

} // namespace sqc
