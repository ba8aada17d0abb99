#pragma once

#include <optional>

#include "sqc/scalar.hpp"

namespace sqc {

/// Exact square root of a rational, if one exists in Q (result is >= 0).
std::optional<Rational> sqrt_rational(const Rational& q);

/// Exact n-th root of a rational, if one exists in Q. For even n the input
/// must be >= 0; for odd n the sign carries over.
std::optional<Rational> nth_root_rational(const Rational& q, unsigned n);

/// Exact square root within F = Q(z), if one exists. Works through the tower
/// Q ⊂ Q(√3) ⊂ Q(√3)(i) = F, which decides squareness for every element.
std::optional<Scalar> sqrt_scalar(const Scalar& a);

/// Exact n-th root within F of a monomial element r·z^k (r rational), if one
/// exists. Returns nullopt for non-monomial inputs even when a root exists;
/// callers that need all roots multiply by powers of the cube root of unity.
std::optional<Scalar> nth_root_monomial(const Scalar& a, unsigned n);

/// Exact cube root within F, total on perfect cubes: returns some x with
/// x³ = a whenever one exists in F (the other two roots are x·w, x·w² for
/// the cube root of unity w), and nullopt otherwise. Works by descending to
/// the three quadratic subfields Q(i), Q(√3), Q(√−3): there a cube root has
/// rational norm and its trace is an integer root of a monic integer cubic,
/// both computable exactly.
std::optional<Scalar> cube_root_scalar(const Scalar& a);

} // namespace sqc
