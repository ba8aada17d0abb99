#include "sqc/maps.hpp"

#include <algorithm>
#include <optional>

#include "sqc/errors.hpp"

namespace sqc {

namespace {

// Structure-constant table: product_table()[i][j] = basis_i * basis_j.
const std::array<std::array<AlgElem, 8>, 8>& product_table() {
    static const auto table = [] {
        std::array<std::array<AlgElem, 8>, 8> t;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                t[i][j] = alg_multiply(AlgElem::basis_vector(i), AlgElem::basis_vector(j));
        return t;
    }();
    return table;
}

AlgElem column(const LinEndo& phi, std::size_t j) {
    std::array<Scalar, 8> c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = phi.at(i, j);
    return AlgElem::from_coords(c);
}

/// phi(v) as a combination of cached basis images; cheap when v is sparse.
AlgElem combine_images(const std::array<AlgElem, 8>& img, const AlgElem& v) {
    AlgElem out;
    const auto c = v.coords();
    for (std::size_t k = 0; k < 8; ++k)
        if (!c[k].is_zero()) out = out + c[k] * img[k];
    return out;
}

} // namespace

AlgElem apply_endo(const LinEndo& phi, const AlgElem& a) {
    if (phi.rows() != 8 || phi.cols() != 8)
        throw dimension_mismatch("endomorphism matrix must be 8x8");
    return AlgElem::from_coords(phi.apply(a.coord_vector()));
}

LinEndo endo_from_images(const std::array<AlgElem, 8>& images) {
    Matrix m(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        const auto c = images[j].coords();
        for (std::size_t i = 0; i < 8; ++i) m.at(i, j) = c[i];
    }
    return m;
}

bool Perm::is_valid() const {
    std::array<bool, 3> seen{};
    for (std::size_t v : img) {
        if (v < 1 || v > 3 || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c;
    for (std::size_t i = 1; i <= 3; ++i) c.img[i - 1] = a(b(i));
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c;
    for (std::size_t i = 1; i <= 3; ++i) c.img[a(i) - 1] = i;
    return c;
}

KElem apply_twist(KTwist psi, const KElem& k) {
    return psi == KTwist::identity ? k : k_exchange(k);
}

LinEndo f_sigma(const Perm& sigma) {
    if (!sigma.is_valid()) throw internal_inconsistency("invalid permutation");
    std::array<AlgElem, 8> images;
    images[0] = AlgElem::basis_vector(0);
    images[1] = AlgElem::basis_vector(1);
    for (std::size_t i = 1; i <= 3; ++i) {
        const std::size_t j = sigma(i);
        images[2 * i] = AlgElem::basis_vector(2 * j);       // e+ x_i -> e+ x_j
        images[2 * i + 1] = AlgElem::basis_vector(2 * j + 1); // e- x_i -> e- x_j
    }
    return endo_from_images(images);
}

LinEndo theta_aut(const KElem& r1, const KElem& r2, KTwist psi) {
    if (!k_in_s1(r1)) throw not_in_s1("r1 does not satisfy r ex(r) = 1");
    if (!k_in_s1(r2)) throw not_in_s1("r2 does not satisfy r ex(r) = 1");
    const std::array<KElem, 4> r = {KElem::one(), r1, r2, k_exchange(r1 * r2)};
    std::array<AlgElem, 8> images;
    for (std::size_t i = 0; i < 4; ++i) {
        // Basis vectors 2i, 2i+1 carry K coordinates e+, e- in slot i.
        for (std::size_t half = 0; half < 2; ++half) {
            const KElem e = (half == 0) ? KElem::e_plus() : KElem::e_minus();
            AlgElem img;
            img.k[i] = apply_twist(psi, e) * r[i];
            images[2 * i + half] = img;
        }
    }
    return endo_from_images(images);
}

bool is_automorphism(const LinEndo& phi) {
    if (phi.rows() != 8 || phi.cols() != 8) return false;
    if (rank(phi) != 8) return false;
    const auto& table = product_table();
    std::array<AlgElem, 8> img;
    for (std::size_t i = 0; i < 8; ++i) img[i] = column(phi, i);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (!(combine_images(img, table[i][j]) == alg_multiply(img[i], img[j]))) return false;
    // The involution swaps the two idempotent halves of K and fixes the rest,
    // so commuting with it is a columnwise condition.
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t conj = i == 0 ? 1 : i == 1 ? 0 : i;
        if (!(alg_involute(img[i]) == img[conj])) return false;
    }
    return true;
}

bool is_derivation(const LinEndo& d) {
    if (d.rows() != 8 || d.cols() != 8) return false;
    const auto& table = product_table();
    std::array<AlgElem, 8> img;
    for (std::size_t i = 0; i < 8; ++i) img[i] = column(d, i);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const AlgElem lhs = combine_images(img, table[i][j]);
            const AlgElem rhs = alg_multiply(img[i], AlgElem::basis_vector(j)) +
                                alg_multiply(AlgElem::basis_vector(i), img[j]);
            if (!(lhs == rhs)) return false;
        }
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t conj = i == 0 ? 1 : i == 1 ? 0 : i;
        if (!(alg_involute(img[i]) == img[conj])) return false;
    }
    return true;
}

LinEndo d_param(const DerParams& p) {
    const std::array<Scalar, 3> coeff = {p.lambda, p.beta, -(p.lambda + p.beta)};
    Matrix m(8, 8);
    for (std::size_t i = 1; i <= 3; ++i) {
        // Module action of s: e+ s = e+, e- s = -e-.
        m.at(2 * i, 2 * i) = coeff[i - 1];
        m.at(2 * i + 1, 2 * i + 1) = -coeff[i - 1];
    }
    return m;
}

std::vector<Scalar> endo_to_vector(const LinEndo& m) {
    std::vector<Scalar> v;
    v.reserve(64);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) v.push_back(m.at(i, j));
    return v;
}

LinEndo endo_from_vector(const std::vector<Scalar>& v) {
    if (v.size() != 64) throw dimension_mismatch("endomorphism vector must have length 64");
    Matrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = v[8 * i + j];
    return m;
}

Subspace derivation_space() {
    // Unknowns: the 64 entries m[t][c] of the endomorphism, index 8t + c.
    const auto& table = product_table();
    Matrix sys(576, 64);
    std::size_t row = 0;
    // Leibniz rule d(ab) = d(a)b + a d(b) on basis pairs, one row per output
    // coordinate t: sum_c w_c m[t][c] - sum_r C[r][b][t] m[r][a]
    //                                  - sum_r C[a][r][t] m[r][b] = 0,
    // where w = ab and C[u][v][t] is coordinate t of basis_u * basis_v.
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            const auto w = table[a][b].coords();
            for (std::size_t t = 0; t < 8; ++t, ++row) {
                for (std::size_t c = 0; c < 8; ++c)
                    sys.at(row, 8 * t + c) += w[c];
                for (std::size_t r = 0; r < 8; ++r) {
                    sys.at(row, 8 * r + a) -= table[r][b].coords()[t];
                    sys.at(row, 8 * r + b) -= table[a][r].coords()[t];
                }
            }
        }
    // Involution compatibility d(ex(v)) = ex(d(v)): with V the involution
    // matrix, D V - V D = 0 entrywise.
    Matrix vmat(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        const auto c = alg_involute(AlgElem::basis_vector(j)).coords();
        for (std::size_t i = 0; i < 8; ++i) vmat.at(i, j) = c[i];
    }
    for (std::size_t t = 0; t < 8; ++t)
        for (std::size_t c = 0; c < 8; ++c, ++row)
            for (std::size_t r = 0; r < 8; ++r) {
                sys.at(row, 8 * t + r) += vmat.at(r, c);
                sys.at(row, 8 * r + c) -= vmat.at(t, r);
            }
    return kernel(sys);
}

KElem AutFactors::r(std::size_t i) const {
    switch (i) {
        case 1: return r1;
        case 2: return r2;
        case 3: return r3();
        default: throw internal_inconsistency("coefficient index out of range");
    }
}

AutFactors identity_factors() { return AutFactors{}; }

LinEndo realize(const AutFactors& f) {
    return theta_aut(f.r1, f.r2, f.psi) * f_sigma(f.sigma);
}

AutFactors semidirect_mul(const AutFactors& a, const AutFactors& b) {
    AutFactors c;
    c.sigma = perm_compose(a.sigma, b.sigma);
    c.psi = twist_compose(a.psi, b.psi);
    const Perm inv_sa = perm_inverse(a.sigma);
    c.r1 = a.r(1) * apply_twist(a.psi, b.r(inv_sa(1)));
    c.r2 = a.r(2) * apply_twist(a.psi, b.r(inv_sa(2)));
    return c;
}

AutFactors factors_inverse(const AutFactors& a) {
    AutFactors inv;
    inv.sigma = perm_inverse(a.sigma);
    inv.psi = a.psi;
    inv.r1 = apply_twist(a.psi, k_exchange(a.r(a.sigma(1))));
    inv.r2 = apply_twist(a.psi, k_exchange(a.r(a.sigma(2))));
    return inv;
}

AutFactors factor_automorphism(const LinEndo& phi) {
    // The factors are read off structurally and the reassembled map must equal
    // the input exactly; that final comparison is the automorphism certificate,
    // since any map equal to realize(factors) is one. Every extraction failure
    // therefore proves the input is not an automorphism.
    if (phi.rows() != 8 || phi.cols() != 8)
        throw not_an_automorphism("endomorphism matrix must be 8x8");
    // The permutation part: each Kx_i must land in exactly one Kx_j.
    Perm sigma;
    for (std::size_t i = 1; i <= 3; ++i) {
        const AlgElem v = apply_endo(phi, AlgElem::x(i));
        std::optional<std::size_t> hit;
        for (std::size_t j = 1; j <= 3; ++j) {
            const auto names = std::array{CanonicalSpace::Kx1, CanonicalSpace::Kx2,
                                          CanonicalSpace::Kx3};
            if (subspace_contains(canonical_subspace(names[j - 1]), v.coord_vector())) {
                hit = j;
                break;
            }
        }
        if (!hit) throw not_an_automorphism("image of a module generator lies in no Kx_j line");
        sigma.img[i - 1] = *hit;
    }
    if (!sigma.is_valid())
        throw not_an_automorphism("module generator images do not induce a permutation");
    // The K-twist part, from the image of s.
    const AlgElem s_img = apply_endo(phi, AlgElem::s());
    KTwist psi;
    if (s_img == AlgElem::s())
        psi = KTwist::identity;
    else if (s_img == -AlgElem::s())
        psi = KTwist::exchange;
    else
        throw not_an_automorphism("image of s is neither s nor -s");
    // The coefficients, read off after undoing the permutation.
    const LinEndo straightened = phi * f_sigma(perm_inverse(sigma));
    AutFactors out;
    out.sigma = sigma;
    out.psi = psi;
    out.r1 = apply_endo(straightened, AlgElem::x(1)).k[1];
    out.r2 = apply_endo(straightened, AlgElem::x(2)).k[2];
    if (!k_in_s1(out.r1) || !k_in_s1(out.r2))
        throw not_an_automorphism("recovered coefficients are not norm-one");
    if (!(realize(out) == phi))
        throw not_an_automorphism("recovered factors do not reassemble the input");
    return out;
}

} // namespace sqc
