#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_lib.hpp"
#include "sqc/maps.hpp"

using namespace sqc;
using namespace sqc::cli;

TEST_CASE("group specs parse with free factors leading") {
    CHECK(parse_group_spec("Z2xZ4") == AbGroup{0, {2, 4}});
    CHECK(parse_group_spec("Z") == AbGroup{1, {}});
    CHECK(parse_group_spec("ZxZ3") == AbGroup{1, {3}});
    CHECK(parse_group_spec("Z3xZ") == AbGroup{1, {3}});
    CHECK(parse_group_spec("Z2xZ2xZ2") == AbGroup{0, {2, 2, 2}});
    CHECK_THROWS_AS(parse_group_spec(""), parse_error);
    CHECK_THROWS_AS(parse_group_spec("z2"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z1"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Q8"), parse_error);
}

TEST_CASE("group element flags accept digit strings and coordinate lists") {
    const AbGroup g{0, {2, 4}};
    CHECK(parse_group_elem("13", g) == GroupElem{{1, 3}});
    CHECK(parse_group_elem("1,3", g) == GroupElem{{1, 3}});
    CHECK(parse_group_elem("-1,7", g) == GroupElem{{1, 3}});
    CHECK_THROWS_AS(parse_group_elem("1", g), parse_error);
    CHECK_THROWS_AS(parse_group_elem("1,2,3", g), parse_error);
    CHECK_THROWS_AS(parse_group_elem("a,b", g), parse_error);
}

TEST_CASE("scalar flags accept rationals and coefficient lists") {
    CHECK(parse_scalar_flag("3/2") == Scalar(Rational(3, 2)));
    CHECK(parse_scalar_flag("-5") == Scalar(-5));
    CHECK(parse_scalar_flag("0,0,0,1") == scalar_i());
    CHECK(parse_scalar_flag("-1,0,1,0") == scalar_omega());
    CHECK_THROWS_AS(parse_scalar_flag("1,2"), parse_error);
    CHECK_THROWS_AS(parse_scalar_flag("x"), parse_error);
}

TEST_CASE("grading tags resolve to the reference gradings") {
    CHECK(resolve_grading_text("GammaSQ") == gamma_sq());
    CHECK(resolve_grading_text("GammaS1") == gamma_s(1));
    CHECK(resolve_grading_text("GammaS3") == gamma_s(3));
    CHECK(resolve_grading_text(grading_to_json(gamma_s(2)).dump()) == gamma_s(2));
    CHECK_THROWS_AS(resolve_grading_text("GammaS4"), parse_error);
}

TEST_CASE("the table command emits all 64 products") {
    const CommandResult r = cmd_table("json");
    CHECK(r.exit_code == 0);
    CHECK(r.payload["basis"].size() == 8);
    REQUIRE(r.payload["products"].size() == 64);
    // Deterministic output: run twice, compare.
    CHECK(cmd_table("json").payload == r.payload);
    // Spot value: s*s = 1 appears with its display form.
    bool found = false;
    for (const auto& p : r.payload["products"])
        if (p["left"] == "s" && p["right"] == "s") {
            found = true;
            CHECK(p["display"] == "1");
        }
    CHECK(found);

    const CommandResult md = cmd_table("markdown");
    CHECK(md.exit_code == 0);
    CHECK(md.text_payload.find("| s |") != std::string::npos);
    CHECK_THROWS_AS(cmd_table("yaml"), parse_error);
}

TEST_CASE("the verification suite passes clean and fails when corrupted") {
    const CommandResult ok = cmd_verify(12345, "");
    CHECK(ok.exit_code == 0);
    CHECK(ok.payload["status"] == "ok");
    CHECK(ok.payload["checks"].size() >= 20);
    for (const auto& c : ok.payload["checks"]) CHECK(c["pass"] == true);

    const CommandResult bad = cmd_verify(12345, "x1,x2");
    CHECK(bad.exit_code == 1);
    CHECK(bad.payload["status"] == "error");
    bool saw_cross_check = false;
    for (const auto& c : bad.payload["checks"])
        if (c["name"] == "table_vs_cd") {
            saw_cross_check = true;
            CHECK(c["pass"] == false);
            const std::string detail = c["detail"].get<std::string>();
            CHECK(detail.find("x1") != std::string::npos);
            CHECK(detail.find("x2") != std::string::npos);
        }
    CHECK(saw_cross_check);
    CHECK_THROWS_AS(cmd_verify(1, "x1"), parse_error);
    CHECK_THROWS_AS(cmd_verify(1, "bogus,x2"), parse_error);
}

TEST_CASE("the derivation report carries the basis and bracket") {
    const CommandResult r = cmd_derivations();
    CHECK(r.exit_code == 0);
    CHECK(r.payload["dimension"] == 2);
    CHECK(r.payload["basis"].size() == 2);
    CHECK(r.payload["bracket_is_zero"] == true);
    for (const auto& b : r.payload["basis"])
        CHECK(is_derivation(matrix_from_json(b)));
}

TEST_CASE("automorphism commands check, factor, and compose") {
    AutFactors f;
    f.r1 = KElem{Scalar(2), Scalar(Rational(1, 2))};
    f.sigma = Perm{{2, 3, 1}};
    const std::string phi_text = matrix_to_json(realize(f)).dump();

    const CommandResult chk = cmd_aut_check(phi_text);
    CHECK(chk.exit_code == 0);
    CHECK(chk.payload["automorphism"] == true);

    const CommandResult fac = cmd_aut_factor(phi_text);
    CHECK(fac.exit_code == 0);
    CHECK(aut_factors_from_json(fac.payload) == f);

    Matrix not_aut = Matrix::identity(8);
    not_aut.at(3, 3) = Scalar(5);
    CHECK(cmd_aut_check(matrix_to_json(not_aut).dump()).payload["automorphism"] == false);
    CHECK_THROWS_AS(cmd_aut_factor(matrix_to_json(not_aut).dump()), not_an_automorphism);

    AutFactors g;
    g.psi = KTwist::exchange;
    const CommandResult comp =
        cmd_aut_compose(aut_factors_to_json(f).dump(), aut_factors_to_json(g).dump());
    CHECK(comp.exit_code == 0);
    CHECK(aut_factors_from_json(comp.payload) == semidirect_mul(f, g));
}

TEST_CASE("grading make builds catalogued families from flags") {
    MakeFlags flags;
    flags.family = "SQ1";
    flags.group = "Z2xZ2";
    flags.g1 = "10";
    flags.g2 = "01";
    const CommandResult r = cmd_grading_make(flags);
    CHECK(r.exit_code == 0);
    CHECK(grading_from_json(r.payload) ==
          make_family(Family::SQ1, AbGroup{0, {2, 2}},
                      {{GroupElem{{1, 0}}, GroupElem{{0, 1}}}, {}}));

    // The split family takes a scalar; lambda defaults to 1 when omitted.
    MakeFlags s3;
    s3.family = "S3family";
    s3.group = "Z4";
    s3.h = "2";
    s3.g = "1";
    s3.f = "3";
    CHECK(cmd_grading_make(s3).exit_code == 0);
    s3.lambda = "0";
    CHECK_THROWS_AS(cmd_grading_make(s3), constraint_violation);

    MakeFlags missing;
    missing.family = "SQ1";
    missing.group = "Z2xZ2";
    missing.g1 = "10";
    CHECK_THROWS_AS(cmd_grading_make(missing), parse_error);
    MakeFlags unknown;
    unknown.family = "SQ9";
    unknown.group = "Z2";
    CHECK_THROWS_AS(cmd_grading_make(unknown), parse_error);
}

TEST_CASE("grading validate reports both verdicts") {
    CHECK(cmd_grading_validate("GammaSQ").exit_code == 0);
    CHECK(cmd_grading_validate("GammaSQ").payload["ok"] == true);

    Grading broken = gamma_s(1);
    std::swap(broken.components[0].space, broken.components[1].space);
    const CommandResult r = cmd_grading_validate(grading_to_json(broken).dump());
    CHECK(r.exit_code == 1);
    CHECK(r.payload["ok"] == false);
    CHECK_FALSE(r.payload["message"].get<std::string>().empty());
}

TEST_CASE("grading classify, compare, and coarsen wire through") {
    const CommandResult cls = cmd_grading_classify("GammaSQ");
    CHECK(cls.exit_code == 0);
    CHECK(cls.payload["family"] == "SQ1");

    const CommandResult cmp = cmd_grading_compare("GammaS1", "GammaS2");
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.payload["isomorphic"] == true);
    CHECK(cmp.payload["witness"]["sigma"][0] == 2);

    const CommandResult crs = cmd_grading_coarsen("GammaS1", "GammaSQ");
    CHECK(crs.exit_code == 0);
    CHECK(crs.payload["coarsening"] == true);
    CHECK(cmd_grading_coarsen("GammaSQ", "GammaS1").payload["coarsening"] == false);
}
