#pragma once

#include <array>
#include <cstddef>

#include "sqc/algebra.hpp"
#include "sqc/kelem.hpp"
#include "sqc/matrix.hpp"
#include "sqc/subspace.hpp"

namespace sqc {

/// Linear endomorphism of the 8-dimensional algebra, stored as its matrix in
/// the canonical basis (e+, e-, e+x1, e-x1, e+x2, e-x2, e+x3, e-x3).
/// Columns are images of the basis vectors; composition is matrix product.
using LinEndo = Matrix;

/// Applies an endomorphism to an algebra element.
AlgElem apply_endo(const LinEndo& phi, const AlgElem& a);

/// Builds the endomorphism whose column i is the coordinate vector of
/// images[i].
LinEndo endo_from_images(const std::array<AlgElem, 8>& images);

/// Permutation of the index set {1, 2, 3}, stored as the images of 1, 2, 3.
struct Perm {
    std::array<std::size_t, 3> img{1, 2, 3};

    bool operator==(const Perm&) const = default;

    std::size_t operator()(std::size_t i) const { return img.at(i - 1); }
    bool is_valid() const;

    static Perm identity() { return {}; }
};

Perm perm_compose(const Perm& a, const Perm& b); // a after b
Perm perm_inverse(const Perm& a);

/// The two involution-compatible field-linear automorphisms of K = F e+ x F e-:
/// the identity, and the exchange of the two idempotents (s -> -s).
enum class KTwist { identity, exchange };

KElem apply_twist(KTwist psi, const KElem& k);
inline KTwist twist_compose(KTwist a, KTwist b) {
    return a == b ? KTwist::identity : KTwist::exchange;
}

/// The automorphism permuting the module generators: x_i -> x_{sigma(i)},
/// identity on K.
LinEndo f_sigma(const Perm& sigma);

/// The K-semilinear automorphism determined by a twist psi of K and a pair of
/// norm-one coefficients: k0 -> psi(k0), (k_i)x_i -> (psi(k_i) r_i)x_i with
/// r3 = ex(r1 r2). Throws not_in_s1 unless r1 and r2 satisfy r ex(r) = 1.
LinEndo theta_aut(const KElem& r1, const KElem& r2, KTwist psi);

/// True iff phi is invertible, multiplicative on all 64 basis pairs, and
/// commutes with the involution.
bool is_automorphism(const LinEndo& phi);

/// True iff d satisfies the Leibniz rule on all 64 basis pairs and commutes
/// with the involution.
bool is_derivation(const LinEndo& d);

/// Parameters of the two-dimensional derivation family.
struct DerParams {
    Scalar lambda;
    Scalar beta;
};

/// The derivation killing K and acting on the module coordinates by
/// k1 x1 -> lambda (k1 s)x1, k2 x2 -> beta (k2 s)x2,
/// k3 x3 -> -(lambda+beta) (k3 s)x3.
LinEndo d_param(const DerParams& p);

/// Row-major flattening of an endomorphism into a 64-vector, and its inverse.
std::vector<Scalar> endo_to_vector(const LinEndo& m);
LinEndo endo_from_vector(const std::vector<Scalar>& v);

/// All derivations commuting with the involution, as a subspace of the
/// 64-dimensional endomorphism space (row-major flattening). Computed as the
/// kernel of the combined Leibniz + involution-commuting linear system.
Subspace derivation_space();

/// Factored form of an automorphism: the K-semilinear part (r1, r2, psi)
/// composed after the generator permutation sigma.
struct AutFactors {
    KElem r1 = KElem::one();
    KElem r2 = KElem::one();
    KTwist psi = KTwist::identity;
    Perm sigma;

    bool operator==(const AutFactors&) const = default;

    /// The induced third coefficient ex(r1 r2).
    KElem r3() const { return k_exchange(r1 * r2); }
    /// r1, r2, or r3 by index.
    KElem r(std::size_t i) const;
};

AutFactors identity_factors();

/// theta_aut(r1, r2, psi) composed after f_sigma(sigma).
LinEndo realize(const AutFactors& f);

/// Group law matching composition: realize(a * b) = realize(a) o realize(b).
AutFactors semidirect_mul(const AutFactors& a, const AutFactors& b);

/// Inverse for the semidirect group law.
AutFactors factors_inverse(const AutFactors& a);

/// Recovers the unique factored form of an automorphism: the factors are read
/// off structurally and the reassembled map must equal the input exactly, so
/// the factorization doubles as the automorphism certificate. Throws
/// not_an_automorphism when extraction or exact reassembly fails, which
/// happens precisely when the input fails is_automorphism.
AutFactors factor_automorphism(const LinEndo& phi);

} // namespace sqc
