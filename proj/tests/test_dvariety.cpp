#include "test_util.hpp"

#include "dvkit/dvariety.hpp"

#include <doctest.h>

using namespace dvkit;
using namespace dvkit::testutil;

namespace {

DVariety make_dv(const ContextPtr &ctx, const std::vector<std::string> &gens,
                 const std::vector<std::string> &section, VarietyClaims claims = {}) {
    std::vector<Polynomial> g;
    for (const auto &s : gens) g.push_back(P(ctx, s));
    Section sec;
    for (const auto &s : section) sec.components.push_back(P(ctx, s));
    SectionValidation v = validate_section(Variety(ctx, g, claims), sec);
    REQUIRE(v.valid);
    return *v.dvariety;
}

DVariety poizat() {
    auto ctx = make_context({"x", "y", "z"});
    return make_dv(ctx, {"x*z - 1"}, {"y", "y*z", "-y*z^2"});
}

} // namespace

TEST_CASE("tangent bundles") {
    SUBCASE("circle") {
        auto ctx = make_context({"x", "y"});
        DoubledVariety tv = tangent_bundle(Variety(ctx, {P(ctx, "x^2 + y^2 - 1")}));
        CHECK(tv.dual_names == std::vector<std::string>{"dx", "dy"});
        REQUIRE(tv.gens.size() == 2);
        CHECK(tv.gens[0] == P(tv.context, "x^2 + y^2 - 1"));
        CHECK(tv.gens[1] == P(tv.context, "2*x*dx + 2*y*dy"));
    }
    SUBCASE("affine space has a trivial tangent bundle") {
        auto ctx = make_context({"x", "y", "z"});
        DoubledVariety tv = tangent_bundle(Variety(ctx, {}));
        CHECK(tv.context->nvars() == 6);
        CHECK(tv.gens.empty());
    }
    SUBCASE("the xz = 1 surface") {
        auto ctx = make_context({"x", "y", "z"});
        DoubledVariety tv = tangent_bundle(Variety(ctx, {P(ctx, "x*z - 1")}));
        REQUIRE(tv.gens.size() == 2);
        CHECK(tv.gens[1] == P(tv.context, "z*dx + x*dz"));
    }
}

TEST_CASE("prolongations") {
    SUBCASE("twist by the coefficient delta") {
        auto ctx = make_context({"x"}, {"c"}, {{"c", FieldElement(1)}});
        DoubledVariety tv = prolongation(Variety(ctx, {P(ctx, "x - c")}));
        REQUIRE(tv.gens.size() == 2);
        CHECK(tv.gens[1] == P(tv.context, "dx - 1"));
    }
    SUBCASE("autonomous case agrees with the tangent bundle") {
        auto ctx = make_context({"x", "y", "z"});
        Variety v(ctx, {P(ctx, "x*z - 1"), P(ctx, "y^2 - x")});
        DoubledVariety tv = tangent_bundle(v), pv = prolongation(v);
        CHECK(tv.gens == pv.gens);
        CHECK(tv.gens[1] == P(tv.context, "z*dx + x*dz"));
    }
}

TEST_CASE("section validation") {
    SUBCASE("the Poizat section is valid") {
        auto ctx = make_context({"x", "y", "z"});
        SectionValidation v = validate_section(
            Variety(ctx, {P(ctx, "x*z - 1")}),
            Section{{P(ctx, "y"), P(ctx, "y*z"), P(ctx, "-y*z^2")}});
        CHECK(v.valid);
    }
    SUBCASE("the zero field on the line is valid") {
        auto ctx = make_context({"x"});
        CHECK(validate_section(Variety(ctx, {}), Section{{P(ctx, "0")}}).valid);
    }
    SUBCASE("a non-tangent field is rejected with its residue") {
        auto ctx = make_context({"x", "y"});
        SectionValidation v = validate_section(Variety(ctx, {P(ctx, "x^2 + y^2 - 1")}),
                                               Section{{P(ctx, "1"), P(ctx, "0")}});
        REQUIRE_FALSE(v.valid);
        REQUIRE(v.failures.size() == 1);
        CHECK(v.failures[0].residue == P(ctx, "2*x"));
    }
    SUBCASE("empty varieties are rejected at construction") {
        auto ctx = make_context({"x"});
        CHECK_THROWS_AS(Variety(ctx, {P(ctx, "x"), P(ctx, "x - 1")}), EmptyVarietyError);
    }
}

TEST_CASE("induced derivations") {
    SUBCASE("defining generator dies in the coordinate ring") {
        DVariety d = poizat();
        CHECK(induced_derivation(d, P(d.context(), "x*z - 1")).is_zero());
    }
    SUBCASE("Leibniz cancellation on the plane") {
        auto ctx = make_context({"x", "y"});
        DVariety d = make_dv(ctx, {}, {"x", "-y"});
        CHECK(induced_derivation(d, P(ctx, "x*y")).is_zero());
    }
    SUBCASE("translation flow fixes x - d0") {
        auto ctx = make_context({"x"}, {"d0"}, {{"d0", FieldElement(1)}});
        DVariety d = make_dv(ctx, {}, {"1"});
        CHECK(induced_derivation(d, P(ctx, "x - d0")).is_zero());
    }
}

TEST_CASE("D-subvarieties") {
    auto ctx = make_context({"x", "y"});
    SUBCASE("constant fields fix every subvariety") {
        DVariety d = make_dv(ctx, {}, {"0", "0"});
        CHECK(is_d_subvariety(d, {P(ctx, "y - 2*x")}).ok());
    }
    SUBCASE("translation breaks the diagonal") {
        DVariety d = make_dv(ctx, {}, {"1", "0"});
        DSubvarietyReport r = is_d_subvariety(d, {P(ctx, "y - x")});
        CHECK(r.status == DSubvarietyReport::Status::Invalid);
        REQUIRE(r.entries.size() == 1);
        CHECK(r.entries[0].residue == P(ctx, "-1"));
    }
    SUBCASE("scaling fixes lines through the origin") {
        DVariety d = make_dv(ctx, {}, {"x", "y"});
        CHECK(is_d_subvariety(d, {P(ctx, "y - 2*x")}).ok());
    }
    SUBCASE("W must sit inside V") {
        auto c3 = make_context({"x", "y", "z"});
        DVariety d = make_dv(c3, {"x*z - 1"}, {"y", "y*z", "-y*z^2"});
        CHECK(is_d_subvariety(d, {P(c3, "x")}).status == DSubvarietyReport::Status::NotSubvariety);
    }
}

TEST_CASE("D-points") {
    SUBCASE("equilibrium of the logistic-style field") {
        auto ctx = make_context({"x"});
        DVariety d = make_dv(ctx, {}, {"1 - x"});
        CHECK(is_d_point(d, {FieldElement(1)}).ok());
        CHECK(is_d_point(d, {FieldElement(0)}).status == DPointReport::Status::Invalid);
    }
    SUBCASE("every rational point of the zero field is a D-point") {
        auto ctx = make_context({"x"});
        DVariety d = make_dv(ctx, {}, {"0"});
        CHECK(is_d_point(d, {FieldElement(Rational(22, 7))}).ok());
    }
    SUBCASE("d0 solves delta x = 1") {
        auto ctx = make_context({"x"}, {"d0"}, {{"d0", FieldElement(1)}});
        DVariety d = make_dv(ctx, {}, {"1"});
        CHECK(is_d_point(d, {FE(ctx, "d0")}).ok());
        CHECK(is_d_point(d, {FieldElement(3)}).status == DPointReport::Status::Invalid);
    }
    SUBCASE("points must lie on the variety") {
        auto ctx = make_context({"x", "y", "z"});
        DVariety d = make_dv(ctx, {"x*z - 1"}, {"y", "y*z", "-y*z^2"});
        CHECK(is_d_point(d, {FieldElement(0), FieldElement(0), FieldElement(0)}).status ==
              DPointReport::Status::NotOnVariety);
    }
    SUBCASE("a D-point's singleton ideal is a D-subvariety") {
        auto ctx = make_context({"x", "y"});
        DVariety d = make_dv(ctx, {}, {"x - 1", "2*y - 2"});
        REQUIRE(is_d_point(d, {FieldElement(1), FieldElement(1)}).ok());
        CHECK(is_d_subvariety(d, {P(ctx, "x - 1"), P(ctx, "y - 1")}).ok());
    }
}

TEST_CASE("products") {
    SUBCASE("two lines make a plane") {
        auto ctx = make_context({"x"});
        DVariety line = make_dv(ctx, {}, {"0"});
        DVariety plane = product(line, line);
        CHECK(plane.context()->vars == std::vector<std::string>{"x", "x_2"});
        CHECK(plane.variety().gens().empty());
        CHECK(generic_type_dimension(plane) == 2);
    }
    SUBCASE("Poizat surface times a line") {
        auto ctx1 = make_context({"x"});
        DVariety line = make_dv(ctx1, {}, {"0"});
        DVariety prod = product(poizat(), line);
        CHECK(prod.context()->nvars() == 4);
        CHECK(generic_type_dimension(prod) == 3);
    }
    SUBCASE("product with a point variety pads constant coordinates") {
        auto cx = make_context({"x"});
        DVariety d = make_dv(cx, {}, {"x"});
        DVariety pt = make_dv(cx, {"x - 2"}, {"0"});
        DVariety prod = product(d, pt);
        CHECK(generic_type_dimension(prod) == 1);
        CHECK(is_d_subvariety(prod, {P(prod.context(), "x_2 - 2")}).ok());
    }
}

TEST_CASE("component delta-closure checks") {
    auto ctx = make_context({"x", "y"});
    SUBCASE("scaling field on the coordinate cross") {
        DVariety d = make_dv(ctx, {"x*y"}, {"x", "y"});
        ComponentsReport r = components_delta_check(d, {{P(ctx, "x")}, {P(ctx, "y")}});
        REQUIRE(r.status == ComponentsReport::Status::Ok);
        CHECK(r.all_closed());
    }
    SUBCASE("translation makes the cross fail validation outright") {
        SectionValidation v = validate_section(Variety(ctx, {P(ctx, "x*y")}),
                                               Section{{P(ctx, "1"), P(ctx, "0")}});
        REQUIRE_FALSE(v.valid);
        REQUIRE(v.failures.size() == 1);
        CHECK(v.failures[0].residue == P(ctx, "y"));
    }
    SUBCASE("constants fix a point pair") {
        auto c1 = make_context({"x"});
        DVariety d = make_dv(c1, {"x^2 - 1"}, {"0"});
        ComponentsReport r = components_delta_check(d, {{P(c1, "x - 1")}, {P(c1, "x + 1")}});
        REQUIRE(r.status == ComponentsReport::Status::Ok);
        CHECK(r.all_closed());
    }
    SUBCASE("wrong decompositions are flagged") {
        DVariety d = make_dv(ctx, {"x*y"}, {"x", "y"});
        ComponentsReport r = components_delta_check(d, {{P(ctx, "x")}});
        CHECK(r.status == ComponentsReport::Status::Mismatch);
    }
}

TEST_CASE("generic type dimension") {
    CHECK(generic_type_dimension(poizat()) == 2);
    auto ctx = make_context({"x"});
    CHECK(generic_type_dimension(make_dv(ctx, {}, {"0"})) == 1);
}

TEST_CASE("prolongation ideals do not depend on the generator presentation") {
    auto ctx = make_context({"x", "y"}, {"c"}, {{"c", FieldElement(1)}});
    auto check_pair = [&](std::vector<std::string> a, std::vector<std::string> b) {
        std::vector<Polynomial> ga, gb;
        for (const auto &s : a) ga.push_back(P(ctx, s));
        for (const auto &s : b) gb.push_back(P(ctx, s));
        DoubledVariety da = prolongation(Variety(ctx, ga));
        DoubledVariety db = prolongation(Variety(ctx, gb));
        REQUIRE(same_context(da.context, db.context));
        CHECK(radical_equal(da.gens, db.gens, da.context));
    };
    check_pair({"x - y"}, {"2*x - 2*y"});
    check_pair({"x^2 - y", "x - c"}, {"x - c", "x^2 - y", "(x^2 - y) + (x - c)"});
    check_pair({"x", "y"}, {"x + y", "x - y"});
}

TEST_CASE("induced derivation is additive and Leibniz modulo the ideal") {
    auto ctx = make_context({"x", "y", "z"});
    DVariety d = poizat();
    PolyGen gen(ctx, 8086);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = gen.poly(3, 3), g = gen.poly(3, 3);
        // A sum of normal forms is a normal form, so additivity is exact.
        CHECK(induced_derivation(d, f + g) == induced_derivation(d, f) + induced_derivation(d, g));
        Polynomial lhs = induced_derivation(d, f * g);
        Polynomial rhs = normal_form(induced_derivation(d, f) * g + f * induced_derivation(d, g),
                                     d.variety().basis())
                             .remainder;
        CHECK(lhs == rhs);
    }
}
