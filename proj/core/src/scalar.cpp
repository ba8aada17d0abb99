#include "sqc/scalar.hpp"

#include <array>

namespace sqc {

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    // Schoolbook product of degree-3 polynomials, then reduction by
    // z⁴ = z² − 1 and z⁵ = z³ − z.
    std::array<Rational, 7> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            if (b[j] == 0) continue;
            p[i + j] += a[i] * b[j];
        }
    }
    // z⁶ = z⁴·z² = (z² − 1)z² = z⁴ − z² = −1.
    std::array<Rational, 4> c{p[0], p[1], p[2], p[3]};
    c[2] += p[4];
    c[0] -= p[4];
    c[3] += p[5];
    c[1] -= p[5];
    c[0] -= p[6];
    return Scalar(c);
}

Scalar scalar_inv(const Scalar& a) {
    if (a.is_zero()) throw division_by_zero();
    if (a.is_rational()) return Scalar(Rational(1) / a.rational_part());
    // Solve (multiplication-by-a) x = 1 in the basis {1, z, z², z³}.
    // Column j of m holds the coordinates of a·z^j.
    std::array<std::array<Rational, 4>, 4> m;
    Scalar col = a;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) m[i][j] = col[i];
        col = scalar_mul(col, zeta_power(1));
    }
    std::array<Rational, 4> rhs{Rational(1), 0, 0, 0};
    // Gaussian elimination with partial (first-nonzero) pivoting.
    std::array<std::size_t, 4> row{0, 1, 2, 3};
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t piv = k;
        while (piv < 4 && m[row[piv]][k] == 0) ++piv;
        if (piv == 4) throw internal_inconsistency("singular multiplication matrix for a nonzero field element");
        std::swap(row[k], row[piv]);
        const Rational d = m[row[k]][k];
        for (std::size_t j = k; j < 4; ++j) m[row[k]][j] /= d;
        rhs[row[k]] /= d;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == k) continue;
            const Rational f = m[row[i]][k];
            if (f == 0) continue;
            for (std::size_t j = k; j < 4; ++j) m[row[i]][j] -= f * m[row[k]][j];
            rhs[row[i]] -= f * rhs[row[k]];
        }
    }
    return Scalar({rhs[row[0]], rhs[row[1]], rhs[row[2]], rhs[row[3]]});
}

Scalar zeta_power(long long k) {
    k %= 12;
    if (k < 0) k += 12;
    // z^k for k = 0..11 in the reduced basis; z⁶ = −1 gives the second half.
    const bool neg = k >= 6;
    if (neg) k -= 6;
    std::array<Rational, 4> c{Rational(0), 0, 0, 0};
    switch (k) {
        case 0: c[0] = 1; break;
        case 1: c[1] = 1; break;
        case 2: c[2] = 1; break;
        case 3: c[3] = 1; break;
        case 4: c[2] = 1; c[0] = -1; break;  // z⁴ = z² − 1
        case 5: c[3] = 1; c[1] = -1; break;  // z⁵ = z³ − z
        default: break;
    }
    Scalar result{std::move(c)};
    return neg ? -result : result;
}

std::string scalar_to_string(const Scalar& a) {
    static const char* const names[4] = {"", "z", "z^2", "z^3"};
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (a[k] == 0) continue;
        if (!out.empty()) out += a[k] > 0 ? " + " : " - ";
        const Rational mag = out.empty() ? a[k] : Rational(abs(numerator(a[k])), denominator(a[k]));
        if (k == 0 || mag != 1) out += rational_to_string(mag);
        out += names[k];
    }
    return out.empty() ? "0" : out;
}

} // namespace sqc
