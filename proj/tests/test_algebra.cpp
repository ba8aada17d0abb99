#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqc/algebra.hpp"
#include "sqc/cayley_dickson.hpp"

using namespace sqc;

namespace {

AlgElem eplus_x(std::size_t i) { return k_scale(KElem::e_plus(), AlgElem::x(i)); }
AlgElem eminus_x(std::size_t i) { return k_scale(KElem::e_minus(), AlgElem::x(i)); }
AlgElem s_times(const AlgElem& a) { return k_scale(KElem::s(), a); }

} // namespace

TEST_CASE("K is the split two-dimensional algebra") {
    const KElem ep = KElem::e_plus(), em = KElem::e_minus();
    CHECK(ep * ep == ep);
    CHECK(em * em == em);
    CHECK((ep * em).is_zero());
    CHECK(ep + em == KElem::one());
    CHECK(KElem::s() * KElem::s() == KElem::one());
    CHECK(KElem::one() - KElem::s() == Scalar(2) * em);

    CHECK(k_exchange(KElem::s()) == -KElem::s());
    CHECK(k_exchange(KElem::one()) == KElem::one());
    CHECK(k_exchange(ep) == em);

    CHECK(k_inverse(KElem::s()) == KElem::s());
    CHECK(k_inverse(KElem{Scalar(2), Scalar(3)}) == KElem{Scalar(Rational(1, 2)), Scalar(Rational(1, 3))});
    CHECK_THROWS_AS(k_inverse(ep), division_by_zero);

    // The norm-one circle: r·ex(r) = 1 means left·right = 1.
    CHECK(k_in_s1(KElem::one()));
    CHECK(k_in_s1(KElem{Scalar(5), Scalar(Rational(1, 5))}));
    CHECK_FALSE(k_in_s1(KElem::s()));
    CHECK_FALSE(k_in_s1(ep));
}

TEST_CASE("unit and squares of the module basis") {
    const AlgElem one = AlgElem::one();
    for (std::size_t idx = 0; idx < 8; ++idx) {
        const AlgElem v = AlgElem::basis_vector(idx);
        CHECK(one * v == v);
        CHECK(v * one == v);
    }
    CHECK(AlgElem::s() * AlgElem::s() == one);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(AlgElem::x(i) * AlgElem::x(i) == one);
}

TEST_CASE("one-sided K-linearity of the module part") {
    // x·s = (s)x but s·x = -(s)x: the K-action twists through exchange on the left.
    for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(AlgElem::x(i) * AlgElem::s() == s_times(AlgElem::x(i)));
        CHECK(AlgElem::s() * AlgElem::x(i) == -s_times(AlgElem::x(i)));
    }
    // On the idempotent pieces: s·(e₊x₁) = -e₊x₁ and s·(e₋x₁) = e₋x₁.
    CHECK(AlgElem::s() * eplus_x(1) == -eplus_x(1));
    CHECK(AlgElem::s() * eminus_x(1) == eminus_x(1));
}

TEST_CASE("same-index products exchange the first factor") {
    CHECK(eplus_x(1) * eminus_x(1) == k_scale(KElem::e_minus(), AlgElem::one()));
    CHECK(eminus_x(1) * eplus_x(1) == k_scale(KElem::e_plus(), AlgElem::one()));
    CHECK((eplus_x(2) * eplus_x(2)).is_zero());
    CHECK(AlgElem::x(3) * s_times(AlgElem::x(3)) == AlgElem::s());
    CHECK(s_times(AlgElem::x(3)) * AlgElem::x(3) == -AlgElem::s());
}

TEST_CASE("distinct-index products cycle through the third direction") {
    CHECK(AlgElem::x(1) * AlgElem::x(2) == AlgElem::x(3));
    CHECK(AlgElem::x(2) * AlgElem::x(1) == AlgElem::x(3));
    CHECK(AlgElem::x(2) * AlgElem::x(3) == AlgElem::x(1));
    CHECK(AlgElem::x(3) * AlgElem::x(1) == AlgElem::x(2));
    // The K coefficient passes through exchange: (sx₁)x₂ = ex(s)x₃ = -(s)x₃.
    CHECK(s_times(AlgElem::x(1)) * AlgElem::x(2) == -s_times(AlgElem::x(3)));
}

TEST_CASE("the algebra is not associative") {
    const AlgElem left = (AlgElem::x(1) * AlgElem::x(2)) * AlgElem::s();
    const AlgElem right = AlgElem::x(1) * (AlgElem::x(2) * AlgElem::s());
    CHECK(left == s_times(AlgElem::x(3)));
    CHECK(right == -s_times(AlgElem::x(3)));
    CHECK(left != right);
}

TEST_CASE("doubling construction reproduces every basis product") {
    const Scalar one(1);
    for (std::size_t i = 0; i < 8; ++i) {
        const AlgElem a = AlgElem::basis_vector(i);
        CHECK(from_cd(to_cd(a)) == a);
        for (std::size_t j = 0; j < 8; ++j) {
            const AlgElem b = AlgElem::basis_vector(j);
            const CDElem expected = cd_multiply(to_cd(a), to_cd(b), one);
            CHECK(from_cd(expected) == a * b);
        }
    }
}

TEST_CASE("doubling table agrees with elementwise doubling products") {
    const CDTable table = cd_construct(Scalar(1));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(table[i][j] == cd_multiply(CDElem::basis_vector(i), CDElem::basis_vector(j), Scalar(1)));
    CHECK_THROWS_AS(cd_construct(Scalar(0)), zero_mu);
}

TEST_CASE("theta is the order-two trace reflection") {
    const std::array<Scalar, 4> u0{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
    const std::array<Scalar, 4> expected{
        Scalar(Rational(-1, 2)), Scalar(Rational(1, 2)), Scalar(Rational(1, 2)), Scalar(Rational(1, 2))};
    CHECK(theta(u0) == expected);
    CHECK(theta(theta(u0)) == u0);
    const std::array<Scalar, 4> unit{Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
    CHECK(theta(unit) == unit);
}

TEST_CASE("involution is an involutive antiautomorphism") {
    CHECK(alg_involute(AlgElem::one()) == AlgElem::one());
    CHECK(alg_involute(AlgElem::s()) == -AlgElem::s());
    CHECK(alg_involute(AlgElem::x(1)) == AlgElem::x(1));
    CHECK(alg_involute(eplus_x(2)) == eplus_x(2));
    for (std::size_t i = 0; i < 8; ++i) {
        const AlgElem a = AlgElem::basis_vector(i);
        CHECK(alg_involute(alg_involute(a)) == a);
        for (std::size_t j = 0; j < 8; ++j) {
            const AlgElem b = AlgElem::basis_vector(j);
            CHECK(alg_involute(a * b) == alg_involute(b) * alg_involute(a));
        }
    }
}

TEST_CASE("products in M decompose against 1, s, and M") {
    const auto p = bilinear_b(eplus_x(1), eminus_x(1));
    CHECK(p.b == Scalar(Rational(1, 2)));
    CHECK(p.lambda == Scalar(Rational(-1, 2)));
    CHECK(p.m.is_zero());

    const auto q = bilinear_b(AlgElem::x(1), AlgElem::x(1));
    CHECK(q.b == Scalar(1));
    CHECK(q.lambda == Scalar(0));

    const auto r = bilinear_b(AlgElem::x(1), AlgElem::x(2));
    CHECK(r.b == Scalar(0));
    CHECK(r.lambda == Scalar(0));
    CHECK(r.m == AlgElem::x(3));

    CHECK_THROWS_AS(bilinear_b(AlgElem::one(), AlgElem::x(1)), not_in_m);
    CHECK_THROWS_AS(bilinear_b(AlgElem::x(1), AlgElem::s()), not_in_m);
}

TEST_CASE("the Gram matrix of b pairs the idempotent halves") {
    const Matrix g = bilinear_gram();
    CHECK(g.rows() == 6);
    CHECK(g.cols() == 6);
    CHECK(rank(g) == 6);
    const Scalar half(Rational(1, 2));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(g.at(2 * i, 2 * i + 1) == half);
        CHECK(g.at(2 * i + 1, 2 * i) == half);
        CHECK(g.at(2 * i, 2 * i) == Scalar(0));
    }
    CHECK(g.at(0, 2) == Scalar(0));
    CHECK(g.at(0, 3) == Scalar(0));
}

TEST_CASE("canonical subspaces have the right shape") {
    CHECK(canonical_subspace(CanonicalSpace::S).dim() == 1);
    CHECK(canonical_subspace(CanonicalSpace::H).dim() == 7);
    CHECK(canonical_subspace(CanonicalSpace::M).dim() == 6);
    CHECK(canonical_subspace(CanonicalSpace::K).dim() == 2);
    for (auto name : {CanonicalSpace::Kx1, CanonicalSpace::Kx2, CanonicalSpace::Kx3})
        CHECK(canonical_subspace(name).dim() == 2);

    CHECK(subspace_contains(canonical_subspace(CanonicalSpace::S), AlgElem::s().coord_vector()));
    CHECK(subspace_contains(canonical_subspace(CanonicalSpace::H), AlgElem::one().coord_vector()));
    CHECK(subspace_contains(canonical_subspace(CanonicalSpace::H), AlgElem::x(2).coord_vector()));
    CHECK_FALSE(subspace_contains(canonical_subspace(CanonicalSpace::H), AlgElem::s().coord_vector()));
    CHECK(subspace_sum(canonical_subspace(CanonicalSpace::S), canonical_subspace(CanonicalSpace::H)).dim() == 8);
}

TEST_CASE("M splits into the eigenspaces of left multiplication by s") {
    const Subspace mp = canonical_subspace(CanonicalSpace::Mplus);
    const Subspace mm = canonical_subspace(CanonicalSpace::Mminus);
    CHECK(mp.dim() == 3);
    CHECK(mm.dim() == 3);
    CHECK(subspace_intersection(mp, mm).dim() == 0);
    CHECK(subspace_sum(mp, mm) == canonical_subspace(CanonicalSpace::M));
    for (std::size_t i = 0; i < mp.dim(); ++i) {
        const AlgElem v = AlgElem::from_coords(mp.basis_vector(i));
        CHECK(AlgElem::s() * v == v);
    }
    for (std::size_t i = 0; i < mm.dim(); ++i) {
        const AlgElem v = AlgElem::from_coords(mm.basis_vector(i));
        CHECK(AlgElem::s() * v == -v);
    }
    CHECK(subspace_contains(mp, eminus_x(1).coord_vector()));
    CHECK(subspace_contains(mm, eplus_x(1).coord_vector()));
}

TEST_CASE("scaled doubling parameters give isomorphic algebras") {
    const Scalar mu(4), root(2);
    const Matrix phi = cd_isomorphism(mu, root);
    const CDTable scaled = cd_construct(mu);
    const CDTable reference = cd_construct(Scalar(1));

    const auto apply = [&](const CDElem& x) {
        const auto c = x.coords();
        return CDElem::from_coords([&] {
            const auto v = phi.apply(std::vector<Scalar>(c.begin(), c.end()));
            std::array<Scalar, 8> out;
            std::copy(v.begin(), v.end(), out.begin());
            return out;
        }());
    };

    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            // phi(x ·_mu y) = phi(x) ·_1 phi(y) on all basis pairs.
            CHECK(apply(scaled[i][j]) ==
                  cd_multiply(apply(CDElem::basis_vector(i)), apply(CDElem::basis_vector(j)), Scalar(1)));
        }
        // phi commutes with the involution.
        CHECK(apply(cd_involute(CDElem::basis_vector(i))) == cd_involute(apply(CDElem::basis_vector(i))));
    }

    CHECK_THROWS_AS(cd_isomorphism(Scalar(4), Scalar(3)), invalid_root);
}

TEST_CASE("coordinates round-trip through both presentations") {
    AlgElem a;
    a.k[0] = KElem{Scalar(2), scalar_i()};
    a.k[2] = KElem{scalar_omega(), Scalar(Rational(-1, 3))};
    CHECK(AlgElem::from_coords(a.coords()) == a);
    CHECK(from_cd(to_cd(a)) == a);
    CHECK(a.coord_vector().size() == 8);
    CHECK(a.coord_vector()[0] == Scalar(2));
    CHECK(a.coord_vector()[5] == Scalar(Rational(-1, 3)));
}
