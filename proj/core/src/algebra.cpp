#include "sqc/algebra.hpp"

#include "sqc/errors.hpp"

namespace sqc {

namespace {

/// dst += x·y, skipping all work when a component factor is zero.
/// Products of sparse elements dominate the hot paths, so the skip matters.
void k_mul_acc(KElem& dst, const KElem& x, const KElem& y) {
    if (!x.left.is_zero() && !y.left.is_zero()) dst.left += x.left * y.left;
    if (!x.right.is_zero() && !y.right.is_zero()) dst.right += x.right * y.right;
}

/// dst += ex(x)·y, the exchange folded into the component pairing.
void k_mul_acc_exchange_first(KElem& dst, const KElem& x, const KElem& y) {
    if (!x.right.is_zero() && !y.left.is_zero()) dst.left += x.right * y.left;
    if (!x.left.is_zero() && !y.right.is_zero()) dst.right += x.left * y.right;
}

/// dst += ex(x·y), the exchange applied to the accumulated product.
void k_mul_acc_exchanged(KElem& dst, const KElem& x, const KElem& y) {
    if (!x.right.is_zero() && !y.right.is_zero()) dst.left += x.right * y.right;
    if (!x.left.is_zero() && !y.left.is_zero()) dst.right += x.left * y.left;
}

} // namespace

bool AlgElem::is_zero() const {
    return k[0].is_zero() && k[1].is_zero() && k[2].is_zero() && k[3].is_zero();
}

AlgElem AlgElem::one() {
    AlgElem a;
    a.k[0] = KElem::one();
    return a;
}

AlgElem AlgElem::s() {
    AlgElem a;
    a.k[0] = KElem::s();
    return a;
}

AlgElem AlgElem::x(std::size_t i) {
    AlgElem a;
    a.k.at(i) = KElem::one();
    return a;
}

AlgElem AlgElem::basis_vector(std::size_t idx) {
    AlgElem a;
    a.k.at(idx / 2) = (idx % 2 == 0) ? KElem::e_plus() : KElem::e_minus();
    return a;
}

std::array<Scalar, 8> AlgElem::coords() const {
    return {k[0].left, k[0].right, k[1].left, k[1].right,
            k[2].left, k[2].right, k[3].left, k[3].right};
}

AlgElem AlgElem::from_coords(const std::array<Scalar, 8>& c) {
    AlgElem a;
    for (std::size_t i = 0; i < 4; ++i) a.k[i] = {c[2 * i], c[2 * i + 1]};
    return a;
}

AlgElem AlgElem::from_coords(const std::vector<Scalar>& c) {
    if (c.size() != 8) throw dimension_mismatch("algebra coordinates must have length 8");
    AlgElem a;
    for (std::size_t i = 0; i < 4; ++i) a.k[i] = {c[2 * i], c[2 * i + 1]};
    return a;
}

std::vector<Scalar> AlgElem::coord_vector() const {
    const auto c = coords();
    return {c.begin(), c.end()};
}

AlgElem alg_multiply(const AlgElem& a, const AlgElem& b) {
    AlgElem r;
    // K-part: (f0)(g0) plus the diagonal xᵢxᵢ contributions ex(f_i)·g_i.
    k_mul_acc(r.k[0], a.k[0], b.k[0]);
    for (std::size_t i = 1; i <= 3; ++i) k_mul_acc_exchange_first(r.k[0], a.k[i], b.k[i]);
    // xₖ-part: left action of K, right action of K, and the two cross terms
    // ex(aᵢbⱼ) + ex(aⱼbᵢ).
    static constexpr std::size_t cross[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
    for (std::size_t m = 1; m <= 3; ++m) {
        const std::size_t i = cross[m][0], j = cross[m][1];
        k_mul_acc_exchange_first(r.k[m], a.k[0], b.k[m]);
        k_mul_acc(r.k[m], b.k[0], a.k[m]);
        k_mul_acc_exchanged(r.k[m], a.k[i], b.k[j]);
        k_mul_acc_exchanged(r.k[m], a.k[j], b.k[i]);
    }
    return r;
}

AlgElem alg_involute(const AlgElem& a) {
    AlgElem r = a;
    r.k[0] = k_exchange(a.k[0]);
    return r;
}

BilinearParts bilinear_b(const AlgElem& x, const AlgElem& y) {
    if (!x.k[0].is_zero()) throw not_in_m("left argument has a nonzero K component");
    if (!y.k[0].is_zero()) throw not_in_m("right argument has a nonzero K component");
    const AlgElem p = alg_multiply(x, y);
    // k0 = L·e₊ + R·e₋ = b·1 + λ·s with b = (L+R)/2, λ = (L−R)/2.
    const Scalar half(Rational(1, 2));
    BilinearParts out{half * (p.k[0].left + p.k[0].right),
                      half * (p.k[0].left - p.k[0].right), p};
    out.m.k[0] = KElem::zero();
    return out;
}

Subspace canonical_subspace(CanonicalSpace name) {
    std::vector<std::vector<Scalar>> gens;
    auto add = [&gens](const AlgElem& v) { gens.push_back(v.coord_vector()); };
    switch (name) {
        case CanonicalSpace::S:
            add(AlgElem::s());
            break;
        case CanonicalSpace::H:
            add(AlgElem::one());
            for (std::size_t i = 2; i < 8; ++i) add(AlgElem::basis_vector(i));
            break;
        case CanonicalSpace::M:
            for (std::size_t i = 2; i < 8; ++i) add(AlgElem::basis_vector(i));
            break;
        case CanonicalSpace::Mplus:
            // s·(e₋xᵢ) = +e₋xᵢ.
            for (std::size_t i : {3u, 5u, 7u}) add(AlgElem::basis_vector(i));
            break;
        case CanonicalSpace::Mminus:
            // s·(e₊xᵢ) = −e₊xᵢ.
            for (std::size_t i : {2u, 4u, 6u}) add(AlgElem::basis_vector(i));
            break;
        case CanonicalSpace::K:
            add(AlgElem::one());
            add(AlgElem::s());
            break;
        case CanonicalSpace::Kx1:
            add(AlgElem::basis_vector(2));
            add(AlgElem::basis_vector(3));
            break;
        case CanonicalSpace::Kx2:
            add(AlgElem::basis_vector(4));
            add(AlgElem::basis_vector(5));
            break;
        case CanonicalSpace::Kx3:
            add(AlgElem::basis_vector(6));
            add(AlgElem::basis_vector(7));
            break;
    }
    return Subspace::span(8, gens);
}

Matrix bilinear_gram() {
    Matrix g(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const auto parts =
                bilinear_b(AlgElem::basis_vector(i + 2), AlgElem::basis_vector(j + 2));
            g.at(i, j) = parts.b;
        }
    return g;
}

} // namespace sqc
