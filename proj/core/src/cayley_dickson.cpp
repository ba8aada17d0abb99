#include "sqc/cayley_dickson.hpp"

#include "sqc/errors.hpp"

namespace sqc {

namespace {

using B4 = std::array<Scalar, 4>;

B4 b_mul(const B4& a, const B4& b) {
    B4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] * b[i];
    return r;
}

B4 b_add(const B4& a, const B4& b) {
    B4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

B4 b_scale(const Scalar& c, const B4& a) {
    B4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = c * a[i];
    return r;
}

} // namespace

bool CDElem::is_zero() const {
    for (std::size_t i = 0; i < 4; ++i)
        if (!b1[i].is_zero() || !b2[i].is_zero()) return false;
    return true;
}

std::array<Scalar, 8> CDElem::coords() const {
    return {b1[0], b1[1], b1[2], b1[3], b2[0], b2[1], b2[2], b2[3]};
}

CDElem CDElem::from_coords(const std::array<Scalar, 8>& c) {
    CDElem e;
    for (std::size_t i = 0; i < 4; ++i) {
        e.b1[i] = c[i];
        e.b2[i] = c[i + 4];
    }
    return e;
}

CDElem CDElem::basis_vector(std::size_t idx) {
    CDElem e;
    if (idx < 4)
        e.b1.at(idx) = Scalar(1);
    else
        e.b2.at(idx - 4) = Scalar(1);
    return e;
}

CDElem operator+(const CDElem& a, const CDElem& b) {
    return {b_add(a.b1, b.b1), b_add(a.b2, b.b2)};
}

CDElem operator-(const CDElem& a, const CDElem& b) {
    return a + Scalar(-1) * b;
}

CDElem operator*(const Scalar& c, const CDElem& a) {
    return {b_scale(c, a.b1), b_scale(c, a.b2)};
}

std::array<Scalar, 4> theta(const std::array<Scalar, 4>& b) {
    const Scalar half_trace = Scalar(Rational(1, 2)) * (b[0] + b[1] + b[2] + b[3]);
    B4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = half_trace - b[i];
    return r;
}

CDElem cd_multiply(const CDElem& x, const CDElem& y, const Scalar& mu) {
    CDElem r;
    r.b1 = b_add(b_mul(x.b1, y.b1), b_scale(mu, theta(b_mul(x.b2, theta(y.b2)))));
    r.b2 = b_add(b_mul(theta(x.b1), y.b2), theta(b_mul(theta(x.b2), theta(y.b1))));
    return r;
}

CDElem cd_involute(const CDElem& x) {
    return {x.b1, b_scale(Scalar(-1), theta(x.b2))};
}

CDTable cd_construct(const Scalar& mu) {
    if (mu.is_zero()) throw zero_mu();
    CDTable table;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            table[i][j] = cd_multiply(CDElem::basis_vector(i), CDElem::basis_vector(j), mu);
    return table;
}

std::array<Scalar, 4> cd_defining_vector(std::size_t i) {
    static const std::array<std::array<int, 4>, 4> signs = {{
        {1, 1, 1, 1},
        {1, 1, -1, -1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
    }};
    const auto& row = signs.at(i);
    return {Scalar(row[0]), Scalar(row[1]), Scalar(row[2]), Scalar(row[3])};
}

CDElem to_cd(const AlgElem& a) {
    const Scalar half(Rational(1, 2));
    CDElem out;
    for (std::size_t i = 0; i < 4; ++i) {
        // K coordinate alpha + beta*s in the (e+, e-) presentation.
        const Scalar alpha = half * (a.k[i].left + a.k[i].right);
        const Scalar beta = half * (a.k[i].left - a.k[i].right);
        const B4 v = cd_defining_vector(i);
        // The module action sends x_i * s to (0, -x_i); the unit is fixed.
        const Scalar b2_sign = (i == 0) ? beta : -beta;
        out.b1 = b_add(out.b1, b_scale(alpha, v));
        out.b2 = b_add(out.b2, b_scale(b2_sign, v));
    }
    return out;
}

AlgElem from_cd(const CDElem& c) {
    // The defining vectors are orthogonal with squared length 4, so the
    // coefficient of v_i in b is <b, v_i>/4.
    const Scalar quarter(Rational(1, 4));
    AlgElem out;
    for (std::size_t i = 0; i < 4; ++i) {
        const B4 v = cd_defining_vector(i);
        Scalar alpha, beta;
        for (std::size_t t = 0; t < 4; ++t) {
            alpha += v[t] * c.b1[t];
            beta += v[t] * c.b2[t];
        }
        alpha = quarter * alpha;
        beta = quarter * beta;
        if (i != 0) beta = -beta;
        out.k[i] = {alpha + beta, alpha - beta};
    }
    return out;
}

Matrix cd_isomorphism(const Scalar& mu, const Scalar& sqrt_mu) {
    if (!(sqrt_mu * sqrt_mu == mu))
        throw invalid_root("sqrt_mu squared does not equal mu");
    Matrix m = Matrix::identity(8);
    for (std::size_t i = 4; i < 8; ++i) m.at(i, i) = sqrt_mu;
    return m;
}

} // namespace sqc
