#include "sqc/roots.hpp"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

namespace sqc {
namespace {

/// Floor of the integer n-th root of a non-negative integer, by bisection.
Int floor_nth_root(const Int& x, unsigned n) {
    if (x <= 1) return x;
    Int lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, n) <= x) hi <<= 1;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, n) <= x) lo = mid;
        else hi = mid;
    }
    return lo;
}

std::optional<Int> exact_nth_root_int(const Int& x, unsigned n) {
    if (x < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = exact_nth_root_int(-x, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int r = floor_nth_root(x, n);
    if (boost::multiprecision::pow(r, n) == x) return r;
    return std::nullopt;
}

/// Element u + v·√3 of the real subfield Q(√3).
struct R3 {
    Rational u, v;
    bool operator==(const R3&) const = default;
};

R3 r3_add(const R3& a, const R3& b) { return {a.u + b.u, a.v + b.v}; }
R3 r3_sub(const R3& a, const R3& b) { return {a.u - b.u, a.v - b.v}; }
R3 r3_neg(const R3& a) { return {-a.u, -a.v}; }
R3 r3_mul(const R3& a, const R3& b) {
    return {a.u * b.u + 3 * a.v * b.v, a.u * b.v + a.v * b.u};
}
bool r3_is_zero(const R3& a) { return a.u == 0 && a.v == 0; }

std::optional<R3> sqrt_r3(const R3& x) {
    if (r3_is_zero(x)) return R3{0, 0};
    if (x.v == 0) {
        if (auto r = sqrt_rational(x.u)) return R3{*r, 0};
        // u = 3t² gives √u = t√3.
        if (auto r = sqrt_rational(x.u / 3)) return R3{0, *r};
        return std::nullopt;
    }
    // (u + v√3)² = x needs u² + 3v² = x.u and 2uv = x.v; then
    // 4u⁴ − 4·x.u·u² + 3·x.v² = 0, so u² = (x.u ± n)/2 with n² = x.u² − 3·x.v².
    const auto n = sqrt_rational(x.u * x.u - 3 * x.v * x.v);
    if (!n) return std::nullopt;
    for (const Rational& sign : {Rational(1), Rational(-1)}) {
        const Rational u2 = (x.u + sign * *n) / 2;
        if (u2 < 0) continue;
        if (auto u = sqrt_rational(u2)) {
            if (*u == 0) continue;
            R3 y{*u, x.v / (2 * *u)};
            if (r3_mul(y, y) == x) return y;
        }
    }
    return std::nullopt;
}

/// Splits a into real and imaginary parts over Q(√3): a = re + im·i, using
/// z = √3/2 + i/2, z² = 1/2 + (√3/2)i, z³ = i.
std::pair<R3, R3> to_complex(const Scalar& a) {
    const auto& c = a.coeffs();
    R3 re{c[0] + c[2] / 2, c[1] / 2};
    R3 im{c[1] / 2 + c[3], c[2] / 2};
    return {re, im};
}

Scalar from_complex(const R3& re, const R3& im) {
    // Invert the basis change: c1 = 2·re.v, c2 = 2·im.v, c0 = re.u − im.v, c3 = im.u − re.v.
    return Scalar({re.u - im.v, 2 * re.v, 2 * im.v, im.u - re.v});
}

} // namespace

std::optional<Rational> sqrt_rational(const Rational& q) {
    return nth_root_rational(q, 2);
}

std::optional<Rational> nth_root_rational(const Rational& q, unsigned n) {
    const auto num = exact_nth_root_int(numerator(q), n);
    if (!num) return std::nullopt;
    const auto den = exact_nth_root_int(denominator(q), n);
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

std::optional<Scalar> sqrt_scalar(const Scalar& a) {
    if (a.is_zero()) return Scalar(0);
    const auto [re, im] = to_complex(a);
    if (r3_is_zero(im)) {
        if (auto r = sqrt_r3(re)) return from_complex(*r, R3{0, 0});
        // A negative real square has a purely imaginary root: (ti)² = −t².
        if (auto r = sqrt_r3(r3_neg(re))) return from_complex(R3{0, 0}, *r);
        return std::nullopt;
    }
    // (p + qi)² = a needs p² − q² = re, 2pq = im, and (p² + q²)² = re² + im².
    const auto norm = sqrt_r3(r3_add(r3_mul(re, re), r3_mul(im, im)));
    if (!norm) return std::nullopt;
    for (const R3& n : {*norm, r3_neg(*norm)}) {
        // p² = (re + n)/2.
        const R3 p2 = r3_mul(r3_add(re, n), R3{Rational(1, 2), 0});
        const auto p = sqrt_r3(p2);
        if (!p || r3_is_zero(*p)) continue;
        // q = im / (2p): divide via the Q(√3) norm.
        const R3 two_p = r3_add(*p, *p);
        const Rational d = two_p.u * two_p.u - 3 * two_p.v * two_p.v;
        if (d == 0) continue;
        const R3 inv{two_p.u / d, -two_p.v / d};
        const R3 q = r3_mul(im, inv);
        const Scalar y = from_complex(*p, q);
        if (y * y == a) return y;
    }
    return std::nullopt;
}

namespace {

/// Applies the field automorphism z ↦ z^k (k coprime to 12) coefficientwise.
Scalar galois_conjugate(const Scalar& a, long long k) {
    Scalar out(a[0]);
    for (long long j = 1; j < 4; ++j) out += Scalar(a[j]) * zeta_power(j * k);
    return out;
}

/// All integer roots of s³ + P·s + Q, found by exact bisection on the (at
/// most three) monotone pieces; the Cauchy bound 1 + max(|P|, |Q|) encloses
/// every real root.
std::vector<Int> integer_roots_monic_cubic(const Int& P, const Int& Q) {
    const auto f = [&](const Int& s) { return s * s * s + P * s + Q; };
    const Int bound = 1 + std::max(abs(P), abs(Q));

    std::vector<std::pair<Int, Int>> intervals;
    if (P >= 0) {
        intervals.emplace_back(-bound, bound);
    } else {
        const Int m = floor_nth_root((-P) / 3, 2) + 1;
        intervals.emplace_back(-bound, -m);
        intervals.emplace_back(-m, m);
        intervals.emplace_back(m, bound);
    }

    std::vector<Int> roots;
    const auto record = [&roots](const Int& s) {
        for (const Int& r : roots)
            if (r == s) return;
        roots.push_back(s);
    };
    for (auto [lo, hi] : intervals) {
        if (lo > hi) continue;
        Int flo = f(lo), fhi = f(hi);
        if (flo == 0) record(lo);
        if (fhi == 0) record(hi);
        if ((flo < 0) == (fhi < 0) || flo == 0 || fhi == 0) continue;
        while (hi - lo > 1) {
            const Int mid = (lo + hi) / 2;
            const Int fm = f(mid);
            if (fm == 0) {
                record(mid);
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
    }
    return roots;
}

/// Cube roots of C inside the quadratic subfield Q(g), g² rational: a root
/// u = e + f·g has rational norm n = u·conj(u) with n³ = N(C), and its trace
/// t = 2e satisfies t³ − 3nt − Tr(C) = 0, a rational cubic whose rational
/// roots are integers after clearing denominators (the cubic is monic).
/// conj is the automorphism z ↦ z^k, which restricts to g ↦ −g on Q(g).
std::vector<Scalar> cube_roots_in_subfield(const Scalar& C, const Scalar& g,
                                           const Rational& g_squared, long long k) {
    std::vector<Scalar> out;
    const Scalar conj_C = galois_conjugate(C, k);
    const Scalar trace_s = C + conj_C;
    const Scalar norm_s = C * conj_C;
    if (!trace_s.is_rational() || !norm_s.is_rational()) return out;

    const auto n = nth_root_rational(norm_s.rational_part(), 3);
    if (!n) return out;
    const Rational tr = trace_s.rational_part();

    const Int d = boost::multiprecision::lcm(denominator(*n), denominator(tr));
    const Rational p_rat = Rational(-3) * *n * d * d;
    const Rational q_rat = -tr * d * d * d;
    const Int P = numerator(p_rat);
    const Int Q = numerator(q_rat);

    for (const Int& s : integer_roots_monic_cubic(P, Q)) {
        const Rational e = Rational(s, d) / 2;
        // Norm form: n = e² − f²·g², so f² = (e² − n)/g².
        const Rational f2 = (e * e - *n) / g_squared;
        if (f2 < 0) continue;
        const auto froot = sqrt_rational(f2);
        if (!froot) continue;
        for (const Rational& f : {*froot, Rational(-*froot)}) {
            const Scalar u = Scalar(e) + Scalar(f) * g;
            if (u * u * u == C) {
                bool seen = false;
                for (const Scalar& prev : out)
                    if (prev == u) seen = true;
                if (!seen) out.push_back(u);
            }
            if (froot->is_zero()) break;
        }
    }
    return out;
}

} // namespace

std::optional<Scalar> cube_root_scalar(const Scalar& a) {
    if (a.is_zero()) return Scalar(0);
    if (auto quick = nth_root_monomial(a, 3)) return quick;

    // For a = x³: the products uₖ = x·τₖ(x) land in the quadratic subfields
    // and cube to a·τₖ(a); with the rational norm n = N(x) they reassemble
    // the root as x = a·n/(u₅u₇u₁₁), since u₅u₇u₁₁ = a·n/x. Candidate uₖ are
    // found per subfield and the assembled value is verified exactly.
    const Scalar norm_s = a * galois_conjugate(a, 5) * galois_conjugate(a, 7) *
                          galois_conjugate(a, 11);
    if (!norm_s.is_rational()) return std::nullopt;
    const auto n = nth_root_rational(norm_s.rational_part(), 3);
    if (!n) return std::nullopt;

    const Scalar i = scalar_i();                      // fixed by z ↦ z⁵
    const Scalar sqrt3 = zeta_power(1) + zeta_power(11);   // fixed by z ↦ z¹¹
    const Scalar sqrt_m3 = Scalar(2) * zeta_power(2) - Scalar(1);  // fixed by z ↦ z⁷

    const auto u5 = cube_roots_in_subfield(a * galois_conjugate(a, 5), i, Rational(-1), 7);
    const auto u7 = cube_roots_in_subfield(a * galois_conjugate(a, 7), sqrt_m3, Rational(-3), 5);
    const auto u11 = cube_roots_in_subfield(a * galois_conjugate(a, 11), sqrt3, Rational(3), 5);

    for (const Scalar& x5 : u5)
        for (const Scalar& x7 : u7)
            for (const Scalar& x11 : u11) {
                const Scalar x = a * Scalar(*n) * scalar_inv(x5 * x7 * x11);
                if (x * x * x == a) return x;
            }
    return std::nullopt;
}

std::optional<Scalar> nth_root_monomial(const Scalar& a, unsigned n) {
    if (a.is_zero()) return Scalar(0);
    for (long long k = 0; k < 12; ++k) {
        const Scalar t = a * zeta_power(-k);
        if (!t.is_rational()) continue;
        const auto rho = nth_root_rational(t.rational_part(), n);
        if (!rho) continue;
        // Need j with n·j ≡ k (mod 12); scan the 12 residues.
        for (long long j = 0; j < 12; ++j) {
            if ((static_cast<long long>(n) * j) % 12 != k) continue;
            Scalar candidate = Scalar(*rho) * zeta_power(j);
            Scalar power(1);
            for (unsigned m = 0; m < n; ++m) power *= candidate;
            if (power == a) return candidate;
        }
    }
    return std::nullopt;
}

} // namespace sqc
