#include "sqc/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "sqc/errors.hpp"
#include "sqc/roots.hpp"

namespace sqc {

namespace {

// --------------------------------------------------------------------------
// Sparse polynomials in the six torus unknowns (a1, b1, a2, b2, a3, b3),
// indexed 0..5. Component-membership constraints are affine in these and the
// norm-one side conditions are quadratic, so degrees stay tiny throughout.

constexpr std::size_t kNumVars = 6;

struct Mono {
    std::array<int, kNumVars> e{};

    friend auto operator<=>(const Mono&, const Mono&) = default;

    int total() const {
        int t = 0;
        for (int d : e) t += d;
        return t;
    }
};

using Poly = std::map<Mono, Scalar>;

void poly_add_term(Poly& p, const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly poly_const(const Scalar& c) {
    Poly p;
    poly_add_term(p, Mono{}, c);
    return p;
}

Poly poly_var(std::size_t v) {
    Mono m;
    m.e[v] = 1;
    Poly p;
    poly_add_term(p, m, Scalar(1));
    return p;
}

Poly poly_scale(const Poly& p, const Scalar& c) {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : p) out.emplace(m, coeff * c);
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b) poly_add_term(out, m, c);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b) poly_add_term(out, m, -c);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono m = ma;
            for (std::size_t v = 0; v < kNumVars; ++v) m.e[v] += mb.e[v];
            poly_add_term(out, m, ca * cb);
        }
    }
    return out;
}

Poly poly_pow(const Poly& a, int k) {
    Poly out = poly_const(Scalar(1));
    for (int j = 0; j < k; ++j) out = poly_mul(out, a);
    return out;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

bool poly_is_const(const Poly& p) {
    return p.empty() || (p.size() == 1 && p.begin()->first == Mono{});
}

int poly_degree_in(const Poly& p, std::size_t v) {
    int d = 0;
    for (const auto& [m, c] : p) d = std::max(d, m.e[v]);
    return d;
}

std::set<std::size_t> poly_vars(const Poly& p) {
    std::set<std::size_t> vs;
    for (const auto& [m, c] : p)
        for (std::size_t v = 0; v < kNumVars; ++v)
            if (m.e[v] > 0) vs.insert(v);
    return vs;
}

/// Substitutes var := repl.
Poly poly_subst(const Poly& p, std::size_t var, const Poly& repl) {
    Poly out;
    for (const auto& [m, c] : p) {
        if (m.e[var] == 0) {
            poly_add_term(out, m, c);
            continue;
        }
        Mono rest = m;
        int k = rest.e[var];
        rest.e[var] = 0;
        Poly term = poly_pow(repl, k);
        for (const auto& [tm, tc] : term) {
            Mono full = tm;
            for (std::size_t v = 0; v < kNumVars; ++v) full.e[v] += rest.e[v];
            poly_add_term(out, full, tc * c);
        }
    }
    return out;
}

Scalar poly_eval(const Poly& p, const std::array<Scalar, kNumVars>& val) {
    Scalar sum(0);
    for (const auto& [m, c] : p) {
        Scalar term = c;
        for (std::size_t v = 0; v < kNumVars; ++v)
            for (int j = 0; j < m.e[v]; ++j) term *= val[v];
        sum += term;
    }
    return sum;
}

// --------------------------------------------------------------------------
// Structured solver for the membership + norm-one system. Elimination order:
// variables that occur only as a bare linear term are substituted away; then
// univariate equations are solved by radicals inside F (quadratics through
// the square-root tower, higher monomial equations through root-of-unity
// enumeration); finally an undetermined variable is branched over the unit
// candidates. Every step removes one variable, and any solution found is
// re-verified by the caller, so the search is sound; when it exhausts, no
// witness is reported.

struct TorusSolution {
    std::array<Scalar, kNumVars> value;
};

struct SolverState {
    std::vector<Poly> eqs;
    std::vector<std::pair<std::size_t, Poly>> defs; // eliminated var -> expression
};

constexpr std::size_t kMaxSolutions = 16;

/// Applies var := repl to every equation and recorded definition.
void eliminate(SolverState& st, std::size_t var, const Poly& repl) {
    for (auto& eq : st.eqs) eq = poly_subst(eq, var, repl);
    for (auto& d : st.defs) d.second = poly_subst(d.second, var, repl);
    st.defs.emplace_back(var, repl);
}

/// Drops identically-zero equations; false when a nonzero constant remains.
bool tidy(SolverState& st) {
    std::vector<Poly> kept;
    kept.reserve(st.eqs.size());
    for (auto& eq : st.eqs) {
        if (poly_is_zero(eq)) continue;
        if (poly_is_const(eq)) return false;
        kept.push_back(std::move(eq));
    }
    st.eqs = std::move(kept);
    return true;
}

/// A variable whose only occurrence in eq is the bare degree-one monomial,
/// with its coefficient.
std::optional<std::pair<std::size_t, Scalar>> isolated_var(const Poly& eq) {
    for (std::size_t v = 0; v < kNumVars; ++v) {
        Scalar coeff;
        bool bare = false;
        bool elsewhere = false;
        for (const auto& [m, c] : eq) {
            if (m.e[v] == 0) continue;
            if (m.e[v] == 1 && m.total() == 1) {
                bare = true;
                coeff = c;
            } else {
                elsewhere = true;
                break;
            }
        }
        if (bare && !elsewhere) return {{v, coeff}};
    }
    return std::nullopt;
}

/// Never-eliminated variables default to 1 (they are genuinely free);
/// recorded definitions then evaluate to scalars, since each later
/// elimination was substituted into the earlier definitions.
void finalize(const SolverState& st, std::vector<TorusSolution>& out) {
    TorusSolution sol;
    sol.value.fill(Scalar(1));
    for (const auto& [v, expr] : st.defs) sol.value[v] = poly_eval(expr, sol.value);
    out.push_back(std::move(sol));
}

const std::vector<Scalar>& unit_candidates() {
    static const std::vector<Scalar> kUnits = [] {
        Scalar i = scalar_i();
        Scalar w = scalar_omega();
        return std::vector<Scalar>{Scalar(1), Scalar(-1), i, -i, w, w * w};
    }();
    return kUnits;
}

void solve_rec(SolverState st, std::vector<TorusSolution>& out) {
    if (out.size() >= kMaxSolutions) return;
    if (!tidy(st)) return;
    if (st.eqs.empty()) {
        finalize(st, out);
        return;
    }

    // 1) substitute away a linearly isolated variable (no branching)
    for (const auto& eq : st.eqs) {
        if (auto iso = isolated_var(eq)) {
            auto [v, c] = *iso;
            Poly rest = eq;
            Mono bare;
            bare.e[v] = 1;
            rest.erase(bare);
            Poly repl = poly_scale(rest, -scalar_inv(c));
            eliminate(st, v, repl);
            solve_rec(std::move(st), out);
            return;
        }
    }

    // 2) solve a univariate equation by radicals within F
    for (const auto& eq : st.eqs) {
        auto vs = poly_vars(eq);
        if (vs.size() != 1) continue;
        std::size_t v = *vs.begin();
        int deg = poly_degree_in(eq, v);
        std::vector<Scalar> coef(static_cast<std::size_t>(deg) + 1, Scalar(0));
        for (const auto& [m, c] : eq) coef[static_cast<std::size_t>(m.e[v])] = c;

        std::vector<Scalar> roots;
        if (deg == 2) {
            const Scalar &A = coef[2], &B = coef[1], &C = coef[0];
            Scalar disc = B * B - Scalar(4) * A * C;
            auto sq = sqrt_scalar(disc);
            if (!sq) return; // no root in the coefficient field on this branch
            Scalar inv2a = scalar_inv(Scalar(2) * A);
            roots.push_back((-B + *sq) * inv2a);
            if (!sq->is_zero()) roots.push_back((-B - *sq) * inv2a);
        } else {
            bool monomial = true;
            for (int d = 1; d < deg; ++d)
                if (!coef[static_cast<std::size_t>(d)].is_zero()) monomial = false;
            if (!monomial) return; // unsupported univariate shape
            Scalar target = -coef[0] * scalar_inv(coef[static_cast<std::size_t>(deg)]);
            if (target.is_zero()) {
                roots.push_back(Scalar(0));
            } else if (deg == 3) {
                // Cubes of general field elements arise from gradings whose
                // components split along the idempotent halves; the cube root
                // is total on perfect cubes, so exhaustion here is honest.
                auto base = cube_root_scalar(target);
                if (!base) return;
                const Scalar w = scalar_omega();
                roots.push_back(*base);
                roots.push_back(*base * w);
                roots.push_back(*base * w * w);
            } else if (auto base = nth_root_monomial(target, static_cast<unsigned>(deg))) {
                if (12 % deg == 0) {
                    for (int j = 0; j < deg; ++j)
                        roots.push_back(*base * zeta_power((12 / deg) * j));
                } else {
                    roots.push_back(*base);
                }
            } else {
                return;
            }
        }
        for (const Scalar& root : roots) {
            SolverState next = st;
            eliminate(next, v, poly_const(root));
            solve_rec(std::move(next), out);
            if (out.size() >= kMaxSolutions) return;
        }
        return;
    }

    // 3) branch an undetermined variable over the unit candidates
    std::size_t v = kNumVars;
    for (std::size_t cand = 0; cand < kNumVars && v == kNumVars; ++cand)
        for (const auto& eq : st.eqs)
            if (poly_degree_in(eq, cand) > 0) {
                v = cand;
                break;
            }
    if (v == kNumVars) return;
    for (const Scalar& cand : unit_candidates()) {
        SolverState next = st;
        eliminate(next, v, poly_const(cand));
        solve_rec(std::move(next), out);
        if (out.size() >= kMaxSolutions) return;
    }
}

// --------------------------------------------------------------------------
// Isomorphism search.

/// Coordinates of phi(basis_vector(idx)) as polynomials in the torus unknowns,
/// for phi = theta_aut(r1, r2, psi) o f_sigma(sigma).
std::array<std::array<Poly, 8>, 8> basis_images(const Perm& sigma, KTwist psi) {
    std::array<std::array<Poly, 8>, 8> img{};
    bool ex = (psi == KTwist::exchange);
    img[0][ex ? 1 : 0] = poly_const(Scalar(1));
    img[1][ex ? 0 : 1] = poly_const(Scalar(1));
    for (std::size_t i = 1; i <= 3; ++i) {
        std::size_t j = sigma(i);
        std::size_t a_var = 2 * (j - 1);
        std::size_t b_var = a_var + 1;
        if (!ex) {
            img[2 * i][2 * j] = poly_var(a_var);
            img[2 * i + 1][2 * j + 1] = poly_var(b_var);
        } else {
            img[2 * i][2 * j + 1] = poly_var(b_var);
            img[2 * i + 1][2 * j] = poly_var(a_var);
        }
    }
    return img;
}

/// Requires phi(v) to lie in target for every basis vector v of source:
/// reduces the image coordinates against the target's echelon basis and
/// emits one equation per surviving coordinate.
void append_membership_eqs(std::vector<Poly>& eqs,
                           const std::array<std::array<Poly, 8>, 8>& img,
                           const Subspace& source, const Subspace& target) {
    const Matrix& tb = target.basis();
    for (std::size_t r = 0; r < source.dim(); ++r) {
        std::vector<Scalar> v = source.basis_vector(r);
        std::array<Poly, 8> w{};
        for (std::size_t idx = 0; idx < 8; ++idx) {
            if (v[idx].is_zero()) continue;
            for (std::size_t c = 0; c < 8; ++c)
                w[c] = poly_add(w[c], poly_scale(img[idx][c], v[idx]));
        }
        for (std::size_t tr = 0; tr < tb.rows(); ++tr) {
            std::size_t pivot = 0;
            while (pivot < 8 && tb.at(tr, pivot).is_zero()) ++pivot;
            if (pivot == 8) continue;
            Poly coeff = w[pivot];
            if (poly_is_zero(coeff)) continue;
            for (std::size_t c = pivot; c < 8; ++c)
                w[c] = poly_sub(w[c], poly_mul(coeff, poly_const(tb.at(tr, c))));
        }
        for (auto& c : w)
            if (!poly_is_zero(c)) eqs.push_back(std::move(c));
    }
}

std::vector<std::pair<GroupElem, std::size_t>> support_signature(const Grading& g) {
    std::vector<std::pair<GroupElem, std::size_t>> sig;
    sig.reserve(g.components.size());
    for (const auto& comp : g.components) sig.emplace_back(comp.degree, comp.space.dim());
    std::sort(sig.begin(), sig.end());
    return sig;
}

const std::array<Perm, 6>& all_perms() {
    static const std::array<Perm, 6> kPerms = {
        Perm{{1, 2, 3}}, Perm{{2, 1, 3}}, Perm{{3, 2, 1}},
        Perm{{1, 3, 2}}, Perm{{2, 3, 1}}, Perm{{3, 1, 2}},
    };
    return kPerms;
}

} // namespace

std::vector<GroupElem> grading_support(const Grading& g0) {
    Grading g = g0;
    g.canonicalize();
    std::vector<GroupElem> out;
    out.reserve(g.components.size());
    for (const auto& comp : g.components) out.push_back(comp.degree);
    return out;
}

std::optional<AutFactors> grading_isomorphism(const Grading& a0, const Grading& b0) {
    if (!(a0.group == b0.group))
        throw group_mismatch("grading_isomorphism requires the same group on both sides");
    Grading a = a0;
    Grading b = b0;
    a.canonicalize();
    b.canonicalize();
    if (support_signature(a) != support_signature(b)) return std::nullopt;

    for (const Perm& sigma : all_perms()) {
        for (KTwist psi : {KTwist::identity, KTwist::exchange}) {
            auto img = basis_images(sigma, psi);

            std::vector<Poly> eqs;
            for (const auto& comp : a.components)
                append_membership_eqs(eqs, img, comp.space, b.component_at(comp.degree));

            Poly a1 = poly_var(0), b1 = poly_var(1);
            Poly a2 = poly_var(2), b2 = poly_var(3);
            Poly a3 = poly_var(4), b3 = poly_var(5);
            eqs.push_back(poly_sub(poly_mul(a1, b1), poly_const(Scalar(1))));
            eqs.push_back(poly_sub(poly_mul(a2, b2), poly_const(Scalar(1))));
            eqs.push_back(poly_sub(poly_mul(a3, b3), poly_const(Scalar(1))));
            eqs.push_back(poly_sub(a3, poly_mul(b1, b2)));
            eqs.push_back(poly_sub(b3, poly_mul(a1, a2)));

            std::vector<TorusSolution> sols;
            solve_rec(SolverState{std::move(eqs), {}}, sols);

            for (const auto& sol : sols) {
                KElem r1{sol.value[0], sol.value[1]};
                KElem r2{sol.value[2], sol.value[3]};
                if (!k_in_s1(r1) || !k_in_s1(r2)) continue;
                AutFactors f{r1, r2, psi, sigma};
                LinEndo phi = realize(f);
                if (!is_automorphism(phi)) continue;
                bool maps = true;
                for (const auto& comp : a.components) {
                    Subspace target = b.component_at(comp.degree);
                    for (std::size_t r = 0; r < comp.space.dim() && maps; ++r)
                        if (!subspace_contains(target, phi.apply(comp.space.basis_vector(r))))
                            maps = false;
                    if (!maps) break;
                }
                if (maps) return f;
            }
        }
    }
    return std::nullopt;
}

namespace {

// --------------------------------------------------------------------------
// Classification.

struct Candidate {
    Family family;
    FamilyParams params;
};

bool same_params(const FamilyParams& x, const FamilyParams& y) {
    return x.elems == y.elems && x.scalars == y.scalars;
}

void add_candidate(std::vector<Candidate>& cands, Family family, FamilyParams params) {
    for (const auto& c : cands)
        if (c.family == family && same_params(c.params, params)) return;
    cands.push_back({family, std::move(params)});
}

/// Nonzero intersections of the components with a fixed subspace.
std::vector<std::pair<GroupElem, Subspace>> component_slices(const Grading& g,
                                                             const Subspace& w) {
    std::vector<std::pair<GroupElem, Subspace>> out;
    for (const auto& comp : g.components) {
        Subspace cut = subspace_intersection(comp.space, w);
        if (cut.dim() > 0) out.emplace_back(comp.degree, cut);
    }
    return out;
}

std::vector<GroupElem> slice_degrees(const std::vector<std::pair<GroupElem, Subspace>>& slices) {
    std::vector<GroupElem> out;
    out.reserve(slices.size());
    for (const auto& [deg, cut] : slices) out.push_back(deg);
    return out;
}

Subspace kx_space(std::size_t i) {
    switch (i) {
        case 1: return canonical_subspace(CanonicalSpace::Kx1);
        case 2: return canonical_subspace(CanonicalSpace::Kx2);
        default: return canonical_subspace(CanonicalSpace::Kx3);
    }
}

std::optional<Classification> try_candidates(const Grading& g,
                                             const std::vector<Candidate>& cands) {
    auto sig = support_signature(g);
    for (const auto& cand : cands) {
        Grading canon;
        try {
            canon = make_family(cand.family, g.group, cand.params);
        } catch (const constraint_violation&) {
            continue;
        } catch (const grading_inconsistency&) {
            continue;
        } catch (const completion_failure&) {
            continue;
        }
        if (support_signature(canon) != sig) continue;
        if (auto w = grading_isomorphism(g, canon))
            return Classification{cand.family, cand.params, *w, grading_support(g)};
    }
    return std::nullopt;
}

/// Candidate parameters for gradings refining the quartic split: the defining
/// degrees always occur on the module part, so scanning observed pairs covers
/// every valid assignment up to the permutation and exchange absorbed by the
/// witness search.
std::vector<Candidate> quartic_candidates(const Grading& g, bool s_trivial,
                                          const GroupElem& deg_s,
                                          const std::vector<GroupElem>& m_degs) {
    std::vector<Candidate> cands;
    for (const auto& d1 : m_degs) {
        for (const auto& d2 : m_degs) {
            if (s_trivial)
                add_candidate(cands, Family::SQ1, {{d1, d2}, {}});
            else
                add_candidate(cands, Family::SQ2, {{deg_s, d1, d2}, {}});
        }
    }
    (void)g;
    return cands;
}

/// Candidates for the half-split case with trivial degree of s: the family
/// with a free scalar parameter. The scalar is read off the mixed homogeneous
/// lines in the non-axis plane; the axis degrees supply h and the mixed
/// degrees supply g and f.
std::vector<Candidate> halfsplit_free_candidates(const Grading& g, std::size_t axis) {
    std::vector<Candidate> cands;

    auto axis_slices = component_slices(g, kx_space(axis));
    std::vector<GroupElem> axis_degs = slice_degrees(axis_slices);

    std::size_t j = (axis == 1) ? 2 : 1;
    std::size_t k = (axis == 3) ? 2 : 3;
    Subspace pane = subspace_sum(kx_space(j), kx_space(k));
    auto pane_slices = component_slices(g, pane);

    std::vector<GroupElem> pane_degs;
    std::vector<Scalar> lambdas;
    auto add_lambda = [&lambdas](const Scalar& c) {
        if (c.is_zero()) return;
        if (std::find(lambdas.begin(), lambdas.end(), c) == lambdas.end())
            lambdas.push_back(c);
    };
    for (const auto& [deg, cut] : pane_slices) {
        pane_degs.push_back(deg);
        for (std::size_t r = 0; r < cut.dim(); ++r) {
            AlgElem v = AlgElem::from_coords(cut.basis_vector(r));
            const Scalar& pj = v.k[j].left;
            const Scalar& pk = v.k[k].left;
            const Scalar& mj = v.k[j].right;
            const Scalar& mk = v.k[k].right;
            if (!pj.is_zero() && !pk.is_zero()) {
                add_lambda(pk * scalar_inv(pj));
                add_lambda(pj * scalar_inv(pk));
            }
            if (!mj.is_zero() && !mk.is_zero()) {
                add_lambda(mk * scalar_inv(mj));
                add_lambda(mj * scalar_inv(mk));
            }
        }
    }
    add_lambda(Scalar(1));

    for (const Scalar& lambda : lambdas)
        for (const auto& h : axis_degs)
            for (const auto& gg : pane_degs)
                for (const auto& ff : pane_degs)
                    add_candidate(cands, Family::S3family, {{h, gg, ff}, {lambda}});
    return cands;
}

/// Candidates for the half-split case with nontrivial degree of s: three
/// families, ordered by the observable shape of the mixed homogeneous lines
/// (idempotent coefficients versus invertible ones, then the degree of the
/// axis line), with the other two kept as fall-through.
std::vector<Candidate> halfsplit_torsion_candidates(const Grading& g, std::size_t axis,
                                                    const GroupElem& deg_s,
                                                    const std::vector<GroupElem>& m_degs) {
    const AbGroup& G = g.group;

    std::vector<Candidate> s1_list, s2_list, s3p_list;
    for (const auto& d : m_degs) add_candidate(s1_list, Family::S1family, {{deg_s, d}, {}});
    for (const auto& d : m_degs)
        if (group_elem_order(G, d) == 4)
            add_candidate(s2_list, Family::S2family, {{deg_s, d}, {}});
    for (const auto& d1 : m_degs) {
        if (group_elem_order(G, d1) != 2) continue;
        for (const auto& d2 : m_degs) {
            if (group_elem_order(G, d2) != 2 || d1 == d2) continue;
            add_candidate(s3p_list, Family::S3prime, {{deg_s, d1, d2}, {}});
        }
    }

    std::size_t j = (axis == 1) ? 2 : 1;
    std::size_t k = (axis == 3) ? 2 : 3;
    Subspace pane = subspace_sum(kx_space(j), kx_space(k));
    auto pane_slices = component_slices(g, pane);

    bool idempotent_coeffs = false;
    for (const auto& [deg, cut] : pane_slices) {
        for (std::size_t r = 0; r < cut.dim(); ++r) {
            AlgElem v = AlgElem::from_coords(cut.basis_vector(r));
            for (std::size_t t : {j, k})
                if (!v.k[t].is_zero() && !v.k[t].is_invertible()) idempotent_coeffs = true;
        }
    }

    bool axis_at_identity = false;
    for (const auto& [deg, cut] : component_slices(g, kx_space(axis)))
        if (group_is_identity(G, deg)) axis_at_identity = true;

    std::vector<Candidate> cands;
    auto append = [&cands](const std::vector<Candidate>& list) {
        for (const auto& c : list) add_candidate(cands, c.family, c.params);
    };
    if (idempotent_coeffs) {
        append(s1_list);
        append(s3p_list);
        append(s2_list);
    } else if (axis_at_identity) {
        append(s3p_list);
        append(s2_list);
        append(s1_list);
    } else {
        append(s2_list);
        append(s3p_list);
        append(s1_list);
    }
    return cands;
}

} // namespace

Classification classify(const Grading& g0) {
    Grading g = g0;
    g.canonicalize();
    if (auto res = grading_validate(g); !res.ok)
        throw grading_inconsistency("classify requires a valid grading: " + res.message);

    const AbGroup& G = g.group;
    GroupElem deg_s = deg_of_s(g);
    bool s_trivial = group_is_identity(G, deg_s);

    auto m_slices = component_slices(g, canonical_subspace(CanonicalSpace::M));
    std::vector<GroupElem> m_degs = slice_degrees(m_slices);

    if (compatibility_check(g, gamma_sq())) {
        auto hit = try_candidates(g, quartic_candidates(g, s_trivial, deg_s, m_degs));
        if (!hit) throw unclassifiable("no quartic-split candidate admits a verified witness");
        return *hit;
    }

    std::size_t axis = 0;
    for (std::size_t i = 1; i <= 3 && axis == 0; ++i)
        if (compatibility_check(g, gamma_s(i))) axis = i;

    if (axis != 0) {
        auto cands = s_trivial ? halfsplit_free_candidates(g, axis)
                               : halfsplit_torsion_candidates(g, axis, deg_s, m_degs);
        auto hit = try_candidates(g, cands);
        if (!hit) throw unclassifiable("no half-split candidate admits a verified witness");
        return *hit;
    }

    std::vector<Candidate> cands;
    if (s_trivial) {
        auto mm_slices = component_slices(g, canonical_subspace(CanonicalSpace::Mminus));
        std::vector<GroupElem> mm_degs = slice_degrees(mm_slices);
        for (const auto& d1 : mm_degs)
            for (const auto& d2 : mm_degs)
                add_candidate(cands, Family::T1, {{d1, d2}, {}});
    } else {
        for (const auto& d : m_degs)
            if (group_elem_order(G, d) == 3)
                add_candidate(cands, Family::T2, {{deg_s, d}, {}});
    }
    auto hit = try_candidates(g, cands);
    if (!hit) throw unclassifiable("no ternary candidate admits a verified witness");
    return *hit;
}

} // namespace sqc
