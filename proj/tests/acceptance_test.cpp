// Acceptance gate: runs the ten end-to-end checks the library must satisfy,
// one per criterion, each with its wall-clock budget where one applies.
// Usage: acceptance_test [N]   (N in 1..10; no argument runs all ten).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cli_lib.hpp"
#include "sqc/cayley_dickson.hpp"
#include "sqc/classify.hpp"

using namespace sqc;

namespace {

struct CriterionResult {
    bool ok = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        ok = false;
        notes.push_back(why);
    }
};

struct Criterion {
    std::string name;
    double budget_seconds;  // 0 = no wall-clock requirement
    std::function<void(CriterionResult&)> run;
};

class Rng {
public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}

    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational r(int_in(-6, 6), int_in(1, 4));
            if (r != 0) return r;
        }
    }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar a(std::array<Rational, 4>{Rational(int_in(-6, 6), int_in(1, 4)),
                                             Rational(int_in(-6, 6), int_in(1, 4)),
                                             Rational(int_in(-6, 6), int_in(1, 4)),
                                             Rational(int_in(-6, 6), int_in(1, 4))});
            if (!a.is_zero()) return a;
        }
    }

    KElem s1_elem() {
        const Scalar t = nonzero_scalar();
        return {t, scalar_inv(t)};
    }

    Perm perm() {
        Perm p;
        for (std::size_t i = 2; i > 0; --i)
            std::swap(p.img[i], p.img[static_cast<std::size_t>(int_in(0, static_cast<long long>(i)))]);
        return p;
    }

    AutFactors factors() {
        AutFactors f;
        f.r1 = s1_elem();
        f.r2 = s1_elem();
        f.psi = int_in(0, 1) ? KTwist::exchange : KTwist::identity;
        f.sigma = perm();
        return f;
    }

private:
    std::mt19937_64 eng_;
};

unsigned long long seed_from_env() {
    if (const char* s = std::getenv("QC_SEED")) return std::strtoull(s, nullptr, 10);
    return 12345;
}

/// Whether the subspace is graded: its intersections with the components sum
/// back to the whole subspace.
bool graded_subspace(const Grading& g, const Subspace& space) {
    Subspace acc(space.ambient_dim());
    for (const auto& c : g.components)
        acc = subspace_sum(acc, subspace_intersection(space, c.space));
    return acc == space;
}

/// Whether phi maps each component of a onto the same-degree component of b.
bool maps_components(const LinEndo& phi, const Grading& a, const Grading& b) {
    for (const auto& c : a.components) {
        const Subspace target = b.component_at(c.degree);
        if (target.dim() != c.space.dim()) return false;
        for (std::size_t i = 0; i < c.space.dim(); ++i) {
            const AlgElem image = apply_endo(phi, AlgElem::from_coords(c.space.basis_vector(i)));
            if (!subspace_contains(target, image.coord_vector())) return false;
        }
    }
    return true;
}

Grading transform(const Grading& g, const LinEndo& phi) {
    Grading out;
    out.group = g.group;
    for (const auto& c : g.components) {
        std::vector<std::vector<Scalar>> images;
        for (std::size_t i = 0; i < c.space.dim(); ++i)
            images.push_back(
                apply_endo(phi, AlgElem::from_coords(c.space.basis_vector(i))).coord_vector());
        out.components.push_back({c.degree, Subspace::span(8, images)});
    }
    out.canonicalize();
    return out;
}

// Criterion 1: the doubling construction with parameter 1, rewritten in the
// K-module basis, reproduces the product on all 64 basis pairs.
void criterion_1(CriterionResult& r) {
    const CDTable table = cd_construct(Scalar(1));
    std::size_t checked = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const AlgElem a = AlgElem::basis_vector(i);
            const AlgElem b = AlgElem::basis_vector(j);
            if (from_cd(cd_multiply(to_cd(a), to_cd(b), Scalar(1))) != a * b)
                r.fail("doubled product disagrees at basis pair (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
            if (table[i][j] != cd_multiply(CDElem::basis_vector(i), CDElem::basis_vector(j), Scalar(1)))
                r.fail("structure-constant table disagrees at (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
            ++checked;
        }
    if (checked != 64) r.fail("expected 64 basis pairs");
}

// Criterion 2: the involution-compatible derivations form exactly the
// two-dimensional parameterized family.
void criterion_2(CriterionResult& r) {
    const Subspace der = derivation_space();
    if (der.dim() != 2)
        r.fail("derivation space has dimension " + std::to_string(der.dim()) + ", expected 2");
    const Subspace param = Subspace::span(
        64, {endo_to_vector(d_param({Scalar(1), Scalar(0)})),
             endo_to_vector(d_param({Scalar(0), Scalar(1)}))});
    if (der != param) r.fail("derivation space differs from the two-parameter family span");
}

// Criterion 3: realized factored maps are automorphisms and factor back to
// exactly the same factors, across random coefficients and all twelve
// discrete choices.
void criterion_3(CriterionResult& r) {
    Rng rng(seed_from_env());
    const Perm all_sigma[6] = {{{1, 2, 3}}, {{1, 3, 2}}, {{2, 1, 3}},
                               {{2, 3, 1}}, {{3, 1, 2}}, {{3, 2, 1}}};
    for (int trial = 0; trial < 100 && r.ok; ++trial) {
        const KElem r1 = rng.s1_elem();
        const KElem r2 = rng.s1_elem();
        for (KTwist psi : {KTwist::identity, KTwist::exchange}) {
            for (const Perm& sigma : all_sigma) {
                const AutFactors f{r1, r2, psi, sigma};
                const LinEndo phi = realize(f);
                if (!is_automorphism(phi)) {
                    r.fail("realized map fails the automorphism predicate at trial " +
                           std::to_string(trial));
                    break;
                }
                if (factor_automorphism(phi) != f) {
                    r.fail("factorization does not recover the factors at trial " +
                           std::to_string(trial));
                    break;
                }
            }
            if (!r.ok) break;
        }
    }
}

// Criterion 4: the semidirect group law matches composition of realized maps.
void criterion_4(CriterionResult& r) {
    Rng rng(seed_from_env());
    for (int trial = 0; trial < 100; ++trial) {
        const AutFactors a = rng.factors();
        const AutFactors b = rng.factors();
        if (realize(semidirect_mul(a, b)) != realize(a) * realize(b)) {
            r.fail("semidirect product disagrees with composition at trial " + std::to_string(trial));
            return;
        }
    }
}

// Criterion 5: all eight family constructors over their minimal admissible
// groups produce valid gradings, each within one second.
void criterion_5(CriterionResult& r) {
    for (const auto& inst : cli::minimal_family_instances()) {
        const auto start = std::chrono::steady_clock::now();
        const Grading g = make_family(inst.family, inst.group, inst.params);
        const ValidationResult v = grading_validate(g);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!v.ok) r.fail(family_tag(inst.family) + ": " + v.message);
        if (elapsed >= 1.0)
            r.fail(family_tag(inst.family) + ": construction and validation took " +
                   std::to_string(elapsed) + " s, budget is 1 s");
    }
}

// Criterion 6: on every catalogued construction, the distinguished subspaces
// are graded, deg(s) squares to the identity, the sign eigenspaces of left
// multiplication by s are graded exactly when deg(s) is the identity, and b
// restricted to M pairs components of inverse degrees with full Gram rank.
void criterion_6(CriterionResult& r) {
    if (rank(bilinear_gram()) != 6) r.fail("Gram matrix of b on M does not have rank 6");
    for (const auto& inst : cli::minimal_family_instances()) {
        const std::string tag = family_tag(inst.family);
        const Grading g = make_family(inst.family, inst.group, inst.params);
        for (auto name : {CanonicalSpace::K, CanonicalSpace::M, CanonicalSpace::S, CanonicalSpace::H})
            if (!graded_subspace(g, canonical_subspace(name)))
                r.fail(tag + ": a distinguished subspace is not graded");
        const GroupElem ds = deg_of_s(g);
        if (!group_is_identity(g.group, group_add(g.group, ds, ds)))
            r.fail(tag + ": deg(s) does not square to the identity");
        const bool plus_minus_graded =
            graded_subspace(g, canonical_subspace(CanonicalSpace::Mplus)) &&
            graded_subspace(g, canonical_subspace(CanonicalSpace::Mminus));
        if (plus_minus_graded != group_is_identity(g.group, ds))
            r.fail(tag + ": sign eigenspaces graded iff deg(s) = e fails");
        if (m_sign_components_graded(g) != plus_minus_graded)
            r.fail(tag + ": sign-eigenspace predicate disagrees with the direct check");
        if (!b_homogeneity_check(g)) r.fail(tag + ": b is not homogeneous on M");
    }
}

// Criterion 7: classification round-trips every family constructor, before and
// after scrambling by random automorphisms.
void criterion_7(CriterionResult& r) {
    Rng rng(seed_from_env());
    for (const auto& inst : cli::minimal_family_instances()) {
        const std::string tag = family_tag(inst.family);
        const Grading base = make_family(inst.family, inst.group, inst.params);

        const auto check_roundtrip = [&](const Grading& g, const std::string& what) {
            const Classification cls = classify(g);
            if (cls.family != inst.family) {
                r.fail(tag + ": " + what + " classified as " + family_tag(cls.family));
                return;
            }
            const Grading rebuilt = make_family(cls.family, g.group, cls.params);
            if (!maps_components(realize(cls.witness), g, rebuilt))
                r.fail(tag + ": " + what + " witness does not map onto the canonical form");
        };

        check_roundtrip(base, "canonical construction");
        for (int trial = 0; trial < 20 && r.ok; ++trial) {
            const LinEndo phi = realize(rng.factors());
            check_roundtrip(transform(base, phi), "scramble " + std::to_string(trial));
        }
        if (!r.ok) return;
    }
}

// Criterion 8: each two-piece coarse grading coarsens the standard quartic
// grading, and the coarse gradings are pairwise isomorphic by witnesses whose
// permutation carries the defining index to the target index.
void criterion_8(CriterionResult& r) {
    for (std::size_t i = 1; i <= 3; ++i)
        if (!coarsening_check(gamma_s(i), gamma_sq()))
            r.fail("coarse grading " + std::to_string(i) + " does not coarsen the quartic grading");
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            const auto w = grading_isomorphism(gamma_s(i), gamma_s(j));
            if (!w) {
                r.fail("no isomorphism witness between coarse gradings " + std::to_string(i) +
                       " and " + std::to_string(j));
                continue;
            }
            if (w->sigma(i) != j)
                r.fail("witness permutation sends " + std::to_string(i) + " to " +
                       std::to_string(w->sigma(i)) + ", expected " + std::to_string(j));
            if (!maps_components(realize(*w), gamma_s(i), gamma_s(j)))
                r.fail("witness fails to map components for pair (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
        }
}

// Criterion 9, as stated: for trace-normalized x = e+(l1 x1 + l2 x2 + l3 x3)
// with l1 l2 l3 = 1, require (x^2)^2 = 4x and b(x, x^2) = 6.
//
// The doubling-construction oracle gives different constants; when the stated
// identities fail, the observed ones are reported alongside the failure.
void criterion_9(CriterionResult& r) {
    Rng rng(seed_from_env());
    bool stated_hold = true;
    bool observed_hold = true;
    for (int trial = 0; trial < 50; ++trial) {
        const Scalar l1(rng.nonzero_rational());
        const Scalar l2(rng.nonzero_rational());
        const Scalar l3 = scalar_inv(l1 * l2);
        const AlgElem x = l1 * k_scale(KElem::e_plus(), AlgElem::x(1)) +
                          l2 * k_scale(KElem::e_plus(), AlgElem::x(2)) +
                          l3 * k_scale(KElem::e_plus(), AlgElem::x(3));
        const AlgElem x2 = x * x;
        const AlgElem x4 = x2 * x2;
        const Scalar b = bilinear_b(x, x2).b;
        if (x4 != Scalar(4) * x || b != Scalar(6)) stated_hold = false;
        if (x4 != Scalar(8) * x || b != Scalar(3)) observed_hold = false;
    }
    if (!stated_hold) {
        r.fail("stated identities (x^2)^2 = 4x and b(x, x^2) = 6 do not hold");
        if (observed_hold)
            r.notes.push_back(
                "observed instead, exactly, on all 50 samples: (x^2)^2 = 8x and b(x, x^2) = 3");
    }
}

// Criterion 10: the scaling map between doubling parameters is an isomorphism
// of algebras with involution for mu in {1, 4, 9/4}.
void criterion_10(CriterionResult& r) {
    const std::pair<Scalar, Scalar> cases[] = {
        {Scalar(1), Scalar(1)},
        {Scalar(4), Scalar(2)},
        {Scalar(Rational(9, 4)), Scalar(Rational(3, 2))},
    };
    for (const auto& [mu, root] : cases) {
        const Matrix phi = cd_isomorphism(mu, root);
        if (rank(phi) != 8) {
            r.fail("scaling map is singular for one parameter");
            continue;
        }
        const auto apply = [&](const CDElem& x) {
            const auto c = x.coords();
            const auto v = phi.apply(std::vector<Scalar>(c.begin(), c.end()));
            std::array<Scalar, 8> out;
            std::copy(v.begin(), v.end(), out.begin());
            return CDElem::from_coords(out);
        };
        for (std::size_t i = 0; i < 8 && r.ok; ++i) {
            const CDElem bi = CDElem::basis_vector(i);
            if (apply(cd_involute(bi)) != cd_involute(apply(bi)))
                r.fail("scaling map does not commute with the involution");
            for (std::size_t j = 0; j < 8; ++j) {
                const CDElem bj = CDElem::basis_vector(j);
                if (apply(cd_multiply(bi, bj, mu)) != cd_multiply(apply(bi), apply(bj), Scalar(1))) {
                    r.fail("scaling map is not multiplicative at pair (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
                    break;
                }
            }
        }
    }
}

std::vector<Criterion> all_criteria() {
    return {
        {"doubling construction reproduces the product on all 64 basis pairs", 1.0, criterion_1},
        {"derivations form exactly the two-parameter family", 5.0, criterion_2},
        {"factored automorphisms realize and factor back exactly", 10.0, criterion_3},
        {"semidirect law matches composition on 100 random pairs", 0.0, criterion_4},
        {"all eight family constructors validate over minimal groups", 8.0, criterion_5},
        {"graded-structure suite holds on every construction", 0.0, criterion_6},
        {"classification round-trips all families under scrambles", 30.0, criterion_7},
        {"coarse gradings coarsen and intertwine by index", 0.0, criterion_8},
        {"trace-normalized quartic identities hold as stated", 0.0, criterion_9},
        {"doubling parameters 1, 4, 9/4 give isomorphic algebras", 0.0, criterion_10},
    };
}

} // namespace

int main(int argc, char** argv) {
    const auto criteria = all_criteria();
    std::size_t first = 0, last = criteria.size();
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance_test [1.." << criteria.size() << "]\n";
            return 2;
        }
        first = static_cast<std::size_t>(n - 1);
        last = first + 1;
    }

    std::size_t passed = 0, ran = 0;
    for (std::size_t idx = first; idx < last; ++idx) {
        const Criterion& c = criteria[idx];
        CriterionResult result;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(result);
        } catch (const std::exception& e) {
            result.fail(std::string("unexpected exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && elapsed >= c.budget_seconds)
            result.fail("took " + std::to_string(elapsed) + " s, budget is " +
                        std::to_string(c.budget_seconds) + " s");

        ++ran;
        if (result.ok) ++passed;
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.2f s", elapsed);
        std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << (idx + 1) << ": " << c.name
                  << " (" << timing << ")\n";
        for (const auto& note : result.notes) std::cout << "     " << note << "\n";
    }
    std::cout << passed << "/" << ran << " criteria passed\n";
    return passed == ran ? 0 : 1;
}
