#include "cli_lib.hpp"

#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "sqc/algebra.hpp"
#include "sqc/cayley_dickson.hpp"
#include "sqc/classify.hpp"
#include "sqc/errors.hpp"
#include "sqc/maps.hpp"
#include "sqc/matrix.hpp"
#include "sqc/roots.hpp"
#include "sqc/subspace.hpp"

namespace sqc::cli {
namespace {

// ---------------------------------------------------------------------------
// Display basis {1, s, x1, s*x1, x2, s*x2, x3, s*x3} used by the table
// command and the corruption hook.

const std::array<const char*, 8>& table_names() {
    static const std::array<const char*, 8> names = {"1",  "s",    "x1", "s*x1",
                                                     "x2", "s*x2", "x3", "s*x3"};
    return names;
}

AlgElem table_basis(std::size_t idx) {
    AlgElem a;
    a.k[idx / 2] = (idx % 2 == 0) ? KElem::one() : KElem::s();
    return a;
}

std::size_t table_index(const std::string& name) {
    const auto& names = table_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (name == names[i]) return i;
    throw parse_error("unknown table basis element '" + name + "'");
}

/// One summand of the display form: coefficient times a named basis element.
std::string display_term(const Scalar& coeff, const std::string& name) {
    const std::string c = scalar_to_string(coeff);
    if (name == "1") {
        if (c.find(' ') != std::string::npos) return "(" + c + ")";
        return c;
    }
    if (c == "1") return name;
    if (c == "-1") return "-" + name;
    if (c.find(' ') != std::string::npos) return "(" + c + ")*" + name;
    return c + "*" + name;
}

/// Renders an element as a sum over the display basis.
std::string display_elem(const AlgElem& a) {
    static const char* const base[4] = {"1", "x1", "x2", "x3"};
    static const char* const s_base[4] = {"s", "s*x1", "s*x2", "s*x3"};
    const Scalar half(Rational(1, 2));
    std::vector<std::string> terms;
    for (std::size_t m = 0; m < 4; ++m) {
        const Scalar unit_part = half * (a.k[m].left + a.k[m].right);
        const Scalar s_part = half * (a.k[m].left - a.k[m].right);
        if (!unit_part.is_zero()) terms.push_back(display_term(unit_part, base[m]));
        if (!s_part.is_zero()) terms.push_back(display_term(s_part, s_base[m]));
    }
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].front() == '-')
            out += " - " + terms[i].substr(1);
        else
            out += " + " + terms[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Deterministic random inputs for the verification suite.

class Rng {
public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}

    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    Rational rational() { return Rational(int_in(-6, 6), int_in(1, 4)); }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (r != 0) return r;
        }
    }

    Scalar scalar() {
        return Scalar(std::array<Rational, 4>{rational(), rational(), rational(), rational()});
    }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar a = scalar();
            if (!a.is_zero()) return a;
        }
    }

    KElem kelem() { return {scalar(), scalar()}; }

    /// A norm-one element (t, 1/t).
    KElem s1_elem() {
        const Scalar t = nonzero_scalar();
        return {t, scalar_inv(t)};
    }

    AlgElem elem() {
        AlgElem a;
        for (auto& k : a.k) k = kelem();
        return a;
    }

    /// An element of M (zero K component).
    AlgElem m_elem() {
        AlgElem a = elem();
        a.k[0] = KElem::zero();
        return a;
    }

    Perm perm() {
        Perm p = Perm::identity();
        for (std::size_t i = 2; i >= 1; --i)
            std::swap(p.img[i], p.img[static_cast<std::size_t>(int_in(0, static_cast<long long>(i)))]);
        return p;
    }

    AutFactors factors() {
        AutFactors f;
        f.r1 = s1_elem();
        f.r2 = s1_elem();
        f.psi = int_in(0, 1) == 0 ? KTwist::identity : KTwist::exchange;
        f.sigma = perm();
        return f;
    }

private:
    std::mt19937_64 eng_;
};

/// Sum over components of the intersection with `space` recovers the whole of
/// `space` (the subspace is graded).
bool graded_subspace_check(const Grading& g, const Subspace& space) {
    Subspace acc(space.ambient_dim());
    for (const auto& comp : g.components)
        acc = subspace_sum(acc, subspace_intersection(space, comp.space));
    return acc == space;
}

Subspace left_multiple_space(const AlgElem& a, const Subspace& m) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < m.dim(); ++r)
        rows.push_back(alg_multiply(a, AlgElem::from_coords(m.basis_vector(r))).coord_vector());
    return Subspace::span(8, rows);
}

struct CheckFailure {
    std::string detail;
};

using CheckFn = std::function<void()>;

void require(bool cond, const std::string& detail) {
    if (!cond) throw CheckFailure{detail};
}

std::string describe_current_exception() {
    try {
        throw;
    } catch (const CheckFailure& f) {
        return f.detail;
    } catch (const std::exception& e) {
        return std::string("unexpected exception: ") + e.what();
    } catch (...) {
        return "unexpected unknown exception";
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Flag and input parsing.

AbGroup parse_group_spec(const std::string& spec) {
    AbGroup g;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z') throw parse_error("group spec must be Z factors joined by 'x': " + spec);
        ++pos;
        std::string digits;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos])))
            digits += spec[pos++];
        if (digits.empty()) {
            ++g.free_rank;
        } else {
            const long long n = std::stoll(digits);
            if (n < 2) throw parse_error("torsion factor must have order >= 2: " + spec);
            g.torsion.push_back(n);
        }
        if (pos < spec.size()) {
            if (spec[pos] != 'x') throw parse_error("group factors must be joined by 'x': " + spec);
            ++pos;
            if (pos == spec.size()) throw parse_error("trailing 'x' in group spec: " + spec);
        }
    }
    if (!g.is_valid() || g.coord_count() == 0)
        throw parse_error("empty or invalid group spec: " + spec);
    return g;
}

GroupElem parse_group_elem(const std::string& text, const AbGroup& group) {
    std::vector<long long> coords;
    if (text.find(',') != std::string::npos || text.find('-') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                std::size_t used = 0;
                coords.push_back(std::stoll(part, &used));
                if (used != part.size()) throw parse_error("bad group coordinate: " + part);
            } catch (const std::logic_error&) {
                throw parse_error("bad group coordinate in '" + text + "'");
            }
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("group element must be digits or comma-separated integers: " + text);
            coords.push_back(c - '0');
        }
    }
    if (coords.size() != group.coord_count())
        throw parse_error("group element '" + text + "' has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(group.coord_count()));
    return group_normalize(group, std::move(coords));
}

Scalar parse_scalar_flag(const std::string& text) {
    std::vector<Rational> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        parts.push_back(rational_from_string(part));
    if (parts.size() == 1) return Scalar(parts[0]);
    if (parts.size() == 4)
        return Scalar(std::array<Rational, 4>{parts[0], parts[1], parts[2], parts[3]});
    throw parse_error("scalar flag must be 'p/q' or four comma-separated rationals: " + text);
}

Grading resolve_grading_text(const std::string& text) {
    if (text == "GammaSQ") return gamma_sq();
    if (text == "GammaS1") return gamma_s(1);
    if (text == "GammaS2") return gamma_s(2);
    if (text == "GammaS3") return gamma_s(3);
    return grading_from_json(parse_document(text));
}

std::vector<MinimalInstance> minimal_family_instances() {
    const AbGroup zz{2, {}};
    const AbGroup z2z2z2{0, {2, 2, 2}};
    const AbGroup z4{0, {4}};
    const AbGroup z2z4{0, {2, 4}};
    const AbGroup z3z3{0, {3, 3}};
    const AbGroup z2z3{0, {2, 3}};
    auto e = [](std::initializer_list<long long> c) { return GroupElem{std::vector<long long>(c)}; };

    std::vector<MinimalInstance> out;
    out.push_back({Family::SQ1, zz, {{e({1, 0}), e({0, 1})}, {}}});
    out.push_back({Family::SQ2, z2z2z2, {{e({1, 0, 0}), e({0, 1, 0}), e({0, 0, 1})}, {}}});
    out.push_back({Family::S3family, z4, {{e({2}), e({1}), e({3})}, {Scalar(1)}}});
    out.push_back({Family::S1family, z2z4, {{e({1, 0}), e({0, 1})}, {}}});
    out.push_back({Family::S2family, z2z4, {{e({1, 0}), e({0, 1})}, {}}});
    out.push_back({Family::S3prime, z2z2z2, {{e({1, 0, 0}), e({0, 1, 0}), e({0, 0, 1})}, {}}});
    out.push_back({Family::T1, z3z3, {{e({1, 0}), e({0, 1})}, {}}});
    out.push_back({Family::T2, z2z3, {{e({1, 0}), e({0, 1})}, {}}});
    return out;
}

// ---------------------------------------------------------------------------
// table

CommandResult cmd_table(const std::string& format) {
    if (format != "json" && format != "markdown")
        throw parse_error("table format must be 'json' or 'markdown'");
    CommandResult res;
    const auto& names = table_names();
    if (format == "json") {
        Json products = Json::array();
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                const AlgElem p = alg_multiply(table_basis(i), table_basis(j));
                Json entry;
                entry["left"] = names[i];
                entry["right"] = names[j];
                entry["value"] = alg_elem_to_json(p);
                entry["display"] = display_elem(p);
                products.push_back(std::move(entry));
            }
        }
        res.payload["basis"] = names;
        res.payload["products"] = std::move(products);
    } else {
        std::string md = "| · |";
        for (const char* n : names) md += std::string(" ") + n + " |";
        md += "\n|---|";
        for (std::size_t j = 0; j < 8; ++j) md += "---|";
        md += "\n";
        for (std::size_t i = 0; i < 8; ++i) {
            md += std::string("| ") + names[i] + " |";
            for (std::size_t j = 0; j < 8; ++j)
                md += " " + display_elem(alg_multiply(table_basis(i), table_basis(j))) + " |";
            md += "\n";
        }
        res.text_payload = std::move(md);
    }
    return res;
}

// ---------------------------------------------------------------------------
// verify

CommandResult cmd_verify(unsigned long long seed, const std::string& corrupt) {
    Rng rng(seed);

    std::optional<std::pair<std::size_t, std::size_t>> corrupt_pair;
    if (!corrupt.empty()) {
        const auto comma = corrupt.find(',');
        if (comma == std::string::npos)
            throw parse_error("corruption hook expects 'left,right' table basis names");
        corrupt_pair = {table_index(corrupt.substr(0, comma)),
                        table_index(corrupt.substr(comma + 1))};
    }

    std::vector<std::pair<std::string, CheckFn>> checks;
    auto add = [&checks](std::string name, CheckFn fn) {
        checks.emplace_back(std::move(name), std::move(fn));
    };

    add("scalar_field_axioms", [&rng] {
        for (int t = 0; t < 20; ++t) {
            const Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
            require((a + b) * c == a * c + b * c, "distributivity failed");
            require(a * b == b * a, "commutativity failed");
            require((a * b) * c == a * (b * c), "associativity failed");
        }
        require(zeta_power(4) == zeta_power(2) - Scalar(1), "minimal polynomial of z failed");
        require(zeta_power(12) == Scalar(1), "z is not a 12th root of unity");
        require(scalar_i() * scalar_i() == Scalar(-1), "i^2 != -1");
        const Scalar w = scalar_omega();
        require(w * w * w == Scalar(1) && w * w + w + Scalar(1) == Scalar(0), "omega axioms failed");
    });

    add("scalar_inversion", [&rng] {
        for (int t = 0; t < 20; ++t) {
            const Scalar a = rng.nonzero_scalar();
            require(a * scalar_inv(a) == Scalar(1), "a * a^-1 != 1 for " + scalar_to_string(a));
        }
    });

    add("scalar_roots", [&rng] {
        for (int t = 0; t < 15; ++t) {
            const Scalar a = rng.scalar();
            const Scalar sq = a * a;
            const auto r = sqrt_scalar(sq);
            require(r.has_value(), "square root of a square not found: " + scalar_to_string(sq));
            require((*r) * (*r) == sq, "square root does not square back");
        }
        for (int t = 0; t < 10; ++t) {
            const Scalar m = rng.nonzero_rational() * zeta_power(rng.int_in(0, 11));
            const Scalar cube = m * m * m;
            const auto r = nth_root_monomial(cube, 3);
            require(r.has_value(), "cube root of a monomial cube not found");
            require((*r) * (*r) * (*r) == cube, "cube root does not cube back");
        }
    });

    add("rational_strings", [&rng] {
        for (int t = 0; t < 25; ++t) {
            const Rational r = rng.rational();
            require(rational_from_string(rational_to_string(r)) == r, "round trip failed");
        }
    });

    add("linalg_rref", [&rng] {
        for (int t = 0; t < 8; ++t) {
            std::vector<Scalar> entries;
            for (int k = 0; k < 6 * 8; ++k) entries.push_back(Scalar(rng.rational()));
            const Matrix a(6, 8, entries);
            const Matrix r = rref(a);
            require(rref(r) == r, "rref not idempotent");
            require(rank(a) == r.rows(), "rank disagrees with rref row count");
        }
    });

    add("linalg_inverse", [&rng] {
        for (int t = 0; t < 6; ++t) {
            Matrix a(5, 5, std::vector<Scalar>(25, Scalar(0)));
            do {
                std::vector<Scalar> entries;
                for (int k = 0; k < 25; ++k) entries.push_back(Scalar(rng.rational()));
                a = Matrix(5, 5, entries);
            } while (rank(a) < 5);
            require(a * inverse(a) == Matrix::identity(5), "a * a^-1 != id");
        }
    });

    add("linalg_rank_nullity", [&rng] {
        for (int t = 0; t < 8; ++t) {
            std::vector<Scalar> entries;
            for (int k = 0; k < 4 * 6; ++k) entries.push_back(Scalar(rng.rational()));
            const Matrix a(4, 6, entries);
            require(rank(a) + kernel(a).dim() == 6, "rank-nullity failed");
        }
    });

    add("kelem_ring", [&rng] {
        for (int t = 0; t < 15; ++t) {
            const KElem a = rng.kelem(), b = rng.kelem();
            require(a * b == b * a, "K not commutative");
            require(k_exchange(a * b) == k_exchange(a) * k_exchange(b), "ex not multiplicative");
            require(k_exchange(k_exchange(a)) == a, "ex not involutive");
        }
        require(KElem::e_plus() + KElem::e_minus() == KElem::one(), "idempotents do not sum to 1");
        require((KElem::e_plus() * KElem::e_minus()).is_zero(), "idempotents not orthogonal");
        require(KElem::s() * KElem::s() == KElem::one(), "s^2 != 1");
    });

    add("k_s1_group", [&rng] {
        for (int t = 0; t < 12; ++t) {
            const KElem a = rng.s1_elem(), b = rng.s1_elem();
            require(k_in_s1(a) && k_in_s1(b), "generator not norm-one");
            require(k_in_s1(a * b), "norm-one not closed under product");
            require(k_in_s1(k_inverse(a)), "norm-one not closed under inverse");
        }
    });

    add("table_vs_cd", [&corrupt_pair] {
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                AlgElem lhs = alg_multiply(table_basis(i), table_basis(j));
                if (corrupt_pair && corrupt_pair->first == i && corrupt_pair->second == j)
                    lhs = lhs + AlgElem::one();
                const AlgElem rhs =
                    from_cd(cd_multiply(to_cd(table_basis(i)), to_cd(table_basis(j)), Scalar(1)));
                require(lhs == rhs, std::string("entry (") + table_names()[i] + ", " +
                                        table_names()[j] +
                                        ") disagrees with the doubling construction");
            }
        }
    });

    add("cd_mu_isomorphisms", [] {
        const std::pair<Scalar, Scalar> cases[] = {
            {Scalar(1), Scalar(1)},
            {Scalar(4), Scalar(2)},
            {Scalar(Rational(9, 4)), Scalar(Rational(3, 2))},
        };
        for (const auto& [mu, root] : cases) {
            const Matrix phi = cd_isomorphism(mu, root);
            require(rank(phi) == 8, "map is not invertible");
            auto apply = [&phi](const CDElem& x) {
                const auto c = x.coords();
                const auto v = phi.apply(std::vector<Scalar>(c.begin(), c.end()));
                std::array<Scalar, 8> arr;
                std::copy(v.begin(), v.end(), arr.begin());
                return CDElem::from_coords(arr);
            };
            for (std::size_t i = 0; i < 8; ++i) {
                for (std::size_t j = 0; j < 8; ++j) {
                    const CDElem x = CDElem::basis_vector(i), y = CDElem::basis_vector(j);
                    require(apply(cd_multiply(x, y, mu)) ==
                                cd_multiply(apply(x), apply(y), Scalar(1)),
                            "map is not multiplicative at basis pair (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
                }
                require(apply(cd_involute(CDElem::basis_vector(i))) ==
                            cd_involute(apply(CDElem::basis_vector(i))),
                        "map does not commute with the involution");
            }
        }
    });

    add("nonassociative_guard", [] {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                for (std::size_t k = 0; k < 8; ++k) {
                    const AlgElem a = table_basis(i), b = table_basis(j), c = table_basis(k);
                    if (!((a * b) * c == a * (b * c))) return;
                }
        require(false, "every basis associator vanishes: table degenerated to associative");
    });

    add("involution_antiautomorphism", [&rng] {
        require(alg_involute(AlgElem::one()) == AlgElem::one(), "involution moves 1");
        require(alg_involute(AlgElem::s()) == Scalar(-1) * AlgElem::s(), "involution fixes s");
        for (int t = 0; t < 12; ++t) {
            const AlgElem a = rng.elem(), b = rng.elem();
            require(alg_involute(alg_involute(a)) == a, "involution not involutive");
            require(alg_involute(a * b) == alg_involute(b) * alg_involute(a),
                    "involution not an antiautomorphism");
        }
    });

    add("bilinear_values", [&rng] {
        const AlgElem e1x1 = AlgElem::basis_vector(2), e2x1 = AlgElem::basis_vector(3);
        const BilinearParts p = bilinear_b(e1x1, e2x1);
        require(p.b == Scalar(Rational(1, 2)), "b(e+x1, e-x1) != 1/2");
        require(p.lambda == Scalar(Rational(-1, 2)), "lambda(e+x1, e-x1) != -1/2");
        for (int t = 0; t < 12; ++t) {
            const AlgElem x = rng.m_elem(), y = rng.m_elem();
            const BilinearParts q = bilinear_b(x, y);
            require(q.b == bilinear_b(y, x).b, "b not symmetric");
            require(x * y == q.b * AlgElem::one() + q.lambda * AlgElem::s() + q.m,
                    "product does not decompose as b·1 + lambda·s + m");
            require(q.m.k[0].is_zero(), "m part leaks into K");
        }
    });

    add("gram_rank", [] { require(rank(bilinear_gram()) == 6, "Gram matrix of b on M has rank != 6"); });

    add("canonical_spaces", [] {
        const Subspace K = canonical_subspace(CanonicalSpace::K);
        const Subspace M = canonical_subspace(CanonicalSpace::M);
        const Subspace S = canonical_subspace(CanonicalSpace::S);
        const Subspace H = canonical_subspace(CanonicalSpace::H);
        const Subspace Mp = canonical_subspace(CanonicalSpace::Mplus);
        const Subspace Mm = canonical_subspace(CanonicalSpace::Mminus);
        require(K.dim() == 2 && M.dim() == 6 && S.dim() == 1 && H.dim() == 7,
                "canonical dimensions wrong");
        require(subspace_sum(K, M).dim() == 8 && subspace_intersection(K, M).dim() == 0,
                "A != K + M directly");
        require(subspace_sum(S, H).dim() == 8, "A != S + H");
        require(subspace_sum(Mp, Mm) == M && subspace_intersection(Mp, Mm).dim() == 0,
                "M != M+ + M- directly");
    });

    add("s_sm_identity", [&rng] {
        const AlgElem s = AlgElem::s();
        for (int t = 0; t < 12; ++t) {
            const AlgElem m = rng.m_elem();
            require(s * (s * m) == m, "s(sm) != m");
            require((s * m + m * s).is_zero(), "sm + ms != 0 on M");
        }
    });

    add("m_plus_is_e_m", [] {
        const Subspace M = canonical_subspace(CanonicalSpace::M);
        AlgElem ep, em;
        ep.k[0] = KElem::e_plus();
        em.k[0] = KElem::e_minus();
        require(left_multiple_space(ep, M) == canonical_subspace(CanonicalSpace::Mplus),
                "e+·M != M+");
        require(left_multiple_space(em, M) == canonical_subspace(CanonicalSpace::Mminus),
                "e-·M != M-");
    });

    add("derivation_dimension", [] {
        const Subspace der = derivation_space();
        require(der.dim() == 2, "derivation space has dimension " + std::to_string(der.dim()));
        const Subspace expected = Subspace::span(
            64, {endo_to_vector(d_param({Scalar(1), Scalar(0)})),
                 endo_to_vector(d_param({Scalar(0), Scalar(1)}))});
        require(der == expected, "derivation space differs from the two-parameter span");
    });

    add("derivation_bracket", [&rng] {
        const LinEndo d1 = d_param({Scalar(1), Scalar(0)});
        const LinEndo d2 = d_param({Scalar(0), Scalar(1)});
        require((d1 * d2 - d2 * d1).is_zero(), "basis derivations do not commute");
        for (int t = 0; t < 5; ++t) {
            const LinEndo d = d_param({rng.scalar(), rng.scalar()});
            require(is_derivation(d), "parameter map is not a derivation");
        }
    });

    add("theta_realize", [&rng] {
        for (int t = 0; t < 10; ++t)
            require(is_automorphism(realize(rng.factors())), "realized factors fail the product test");
    });

    add("factor_roundtrip", [&rng] {
        for (int t = 0; t < 10; ++t) {
            const AutFactors a = rng.factors();
            require(factor_automorphism(realize(a)) == a, "factorization does not recover factors");
        }
    });

    add("semidirect_homomorphism", [&rng] {
        for (int t = 0; t < 10; ++t) {
            const AutFactors a = rng.factors(), b = rng.factors();
            require(realize(semidirect_mul(a, b)) == realize(a) * realize(b),
                    "composition law disagrees with matrix composition");
        }
    });

    add("factors_inverse", [&rng] {
        for (int t = 0; t < 10; ++t) {
            const AutFactors a = rng.factors();
            require(semidirect_mul(a, factors_inverse(a)) == identity_factors(),
                    "a * a^-1 != identity");
            require(semidirect_mul(factors_inverse(a), a) == identity_factors(),
                    "a^-1 * a != identity");
        }
    });

    add("family_constructors", [] {
        for (const auto& inst : minimal_family_instances()) {
            const Grading g = make_family(inst.family, inst.group, inst.params);
            const ValidationResult v = grading_validate(g);
            require(v.ok, family_tag(inst.family) + ": " + v.message);
        }
    });

    add("family_lemma_suite", [] {
        for (const auto& inst : minimal_family_instances()) {
            const Grading g = make_family(inst.family, inst.group, inst.params);
            const std::string tag = family_tag(inst.family);
            for (auto space : {CanonicalSpace::K, CanonicalSpace::M, CanonicalSpace::S,
                               CanonicalSpace::H})
                require(graded_subspace_check(g, canonical_subspace(space)),
                        tag + ": a canonical subspace is not graded");
            const GroupElem ds = deg_of_s(g);
            require(group_is_identity(g.group, group_add(g.group, ds, ds)),
                    tag + ": deg(s)^2 != e");
            require(m_sign_components_graded(g) == group_is_identity(g.group, ds),
                    tag + ": M± gradedness does not match deg(s) = e");
            require(b_homogeneity_check(g), tag + ": b is not homogeneous");
        }
    });

    add("classify_catalog", [] {
        for (const auto& inst : minimal_family_instances()) {
            const Classification c = classify(make_family(inst.family, inst.group, inst.params));
            require(c.family == inst.family,
                    family_tag(inst.family) + " classified as " + family_tag(c.family));
        }
    });

    add("gamma_s_coarsens_gamma_sq", [] {
        for (std::size_t i = 1; i <= 3; ++i)
            require(coarsening_check(gamma_s(i), gamma_sq()),
                    "reference split grading " + std::to_string(i) + " is not a coarsening");
    });

    add("gamma_s_isomorphisms", [] {
        for (std::size_t i = 1; i <= 3; ++i) {
            for (std::size_t j = 1; j <= 3; ++j) {
                const auto w = grading_isomorphism(gamma_s(i), gamma_s(j));
                require(w.has_value(), "no isomorphism between split gradings " +
                                           std::to_string(i) + " and " + std::to_string(j));
                require(w->sigma(i) == j, "witness permutation does not send " + std::to_string(i) +
                                              " to " + std::to_string(j));
            }
        }
    });

    add("json_roundtrips", [&rng] {
        const Grading g = gamma_sq();
        require(grading_from_json(grading_to_json(g)) == g, "grading round trip failed");
        for (int t = 0; t < 5; ++t) {
            const AutFactors a = rng.factors();
            require(aut_factors_from_json(aut_factors_to_json(a)) == a,
                    "factors round trip failed");
            const Scalar c = rng.scalar();
            require(scalar_from_json(scalar_to_json(c)) == c, "scalar round trip failed");
        }
    });

    CommandResult res;
    Json out_checks = Json::array();
    std::size_t passed = 0;
    for (const auto& [name, fn] : checks) {
        Json entry;
        entry["name"] = name;
        try {
            fn();
            entry["pass"] = true;
            ++passed;
            res.diagnostics.push_back("ok   " + name);
        } catch (...) {
            const std::string detail = describe_current_exception();
            entry["pass"] = false;
            entry["detail"] = detail;
            res.diagnostics.push_back("FAIL " + name + ": " + detail);
        }
        out_checks.push_back(std::move(entry));
    }
    const bool ok = passed == checks.size();
    res.payload["status"] = ok ? "ok" : "error";
    res.payload["seed"] = seed;
    res.payload["checks"] = std::move(out_checks);
    res.diagnostics.push_back(std::to_string(passed) + "/" + std::to_string(checks.size()) +
                              " checks passed");
    res.exit_code = ok ? 0 : 1;
    return res;
}

// ---------------------------------------------------------------------------
// derivations

CommandResult cmd_derivations() {
    const Subspace der = derivation_space();
    CommandResult res;
    res.payload["dimension"] = der.dim();
    Json basis = Json::array();
    std::vector<LinEndo> mats;
    for (std::size_t r = 0; r < der.dim(); ++r) {
        mats.push_back(endo_from_vector(der.basis_vector(r)));
        basis.push_back(matrix_to_json(mats.back()));
    }
    res.payload["basis"] = std::move(basis);
    bool bracket_zero = true;
    for (const auto& a : mats)
        for (const auto& b : mats)
            bracket_zero = bracket_zero && (a * b - b * a).is_zero();
    res.payload["bracket_is_zero"] = bracket_zero;
    return res;
}

// ---------------------------------------------------------------------------
// aut

CommandResult cmd_aut_check(const std::string& text) {
    const Matrix phi = matrix_from_json(parse_document(text));
    CommandResult res;
    res.payload["automorphism"] = is_automorphism(phi);
    return res;
}

CommandResult cmd_aut_factor(const std::string& text) {
    const Matrix phi = matrix_from_json(parse_document(text));
    CommandResult res;
    res.payload = aut_factors_to_json(factor_automorphism(phi));
    return res;
}

CommandResult cmd_aut_compose(const std::string& text_a, const std::string& text_b) {
    const AutFactors a = aut_factors_from_json(parse_document(text_a));
    const AutFactors b = aut_factors_from_json(parse_document(text_b));
    CommandResult res;
    res.payload = aut_factors_to_json(semidirect_mul(a, b));
    return res;
}

// ---------------------------------------------------------------------------
// grading

namespace {

GroupElem required_elem(const std::string& value, const char* flag, const AbGroup& group) {
    if (value.empty()) throw parse_error(std::string("missing required flag --") + flag);
    return parse_group_elem(value, group);
}

} // namespace

CommandResult cmd_grading_make(const MakeFlags& flags) {
    if (flags.family.empty()) throw parse_error("missing required flag --family");
    CommandResult res;
    if (flags.family == "GammaSQ" || flags.family == "GammaS1" || flags.family == "GammaS2" ||
        flags.family == "GammaS3") {
        res.payload = grading_to_json(resolve_grading_text(flags.family));
        return res;
    }
    const Family family = family_from_tag(flags.family);
    if (flags.group.empty()) throw parse_error("missing required flag --group");
    const AbGroup group = parse_group_spec(flags.group);
    FamilyParams params;
    switch (family) {
        case Family::SQ1:
        case Family::T1:
            params.elems = {required_elem(flags.g1, "g1", group),
                            required_elem(flags.g2, "g2", group)};
            break;
        case Family::SQ2:
            params.elems = {required_elem(flags.g, "g", group),
                            required_elem(flags.g1, "g1", group),
                            required_elem(flags.g2, "g2", group)};
            break;
        case Family::S3family:
            params.elems = {required_elem(flags.h, "h", group),
                            required_elem(flags.g, "g", group),
                            required_elem(flags.f, "f", group)};
            params.scalars = {flags.lambda.empty() ? Scalar(1) : parse_scalar_flag(flags.lambda)};
            break;
        case Family::S1family:
        case Family::S2family:
        case Family::T2:
            params.elems = {required_elem(flags.h, "h", group),
                            required_elem(flags.g, "g", group)};
            break;
        case Family::S3prime:
            params.elems = {required_elem(flags.h, "h", group),
                            required_elem(flags.g, "g", group),
                            required_elem(flags.f, "f", group)};
            break;
    }
    res.payload = grading_to_json(make_family(family, group, params));
    return res;
}

CommandResult cmd_grading_validate(const std::string& text) {
    const Grading g = resolve_grading_text(text);
    const ValidationResult v = grading_validate(g);
    CommandResult res;
    res.payload["ok"] = v.ok;
    res.payload["message"] = v.message;
    if (!v.ok) {
        res.exit_code = 1;
        res.diagnostics.push_back("invalid grading: " + v.message);
    }
    return res;
}

CommandResult cmd_grading_classify(const std::string& text) {
    const Classification c = classify(resolve_grading_text(text));
    CommandResult res;
    res.payload = classification_to_json(c);
    return res;
}

CommandResult cmd_grading_compare(const std::string& text_a, const std::string& text_b) {
    const Grading a = resolve_grading_text(text_a);
    const Grading b = resolve_grading_text(text_b);
    const auto witness = grading_isomorphism(a, b);
    CommandResult res;
    res.payload["isomorphic"] = witness.has_value();
    if (witness) res.payload["witness"] = aut_factors_to_json(*witness);
    return res;
}

CommandResult cmd_grading_coarsen(const std::string& coarse_text, const std::string& fine_text) {
    const Grading coarse = resolve_grading_text(coarse_text);
    const Grading fine = resolve_grading_text(fine_text);
    CommandResult res;
    res.payload["coarsening"] = coarsening_check(coarse, fine);
    return res;
}

} // namespace sqc::cli
