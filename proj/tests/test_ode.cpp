#include "test_util.hpp"

#include "dvkit/ode.hpp"

#include <doctest.h>

using namespace dvkit;
using namespace dvkit::testutil;

TEST_CASE("next derivative from an implicit relation") {
    SUBCASE("Kolchin relation u1(u0+1) = u0") {
        auto ctx = jet_context(2);
        // Differentiating u1(u0+1) - u0 = 0 gives du1 (u0+1) + u1 u1 - u1 = 0.
        CHECK(next_derivative(P(ctx, "u1*(u0+1) - u0")) == RF(ctx, "(u1 - u1^2)/(u0 + 1)"));
    }
    SUBCASE("translation relation u1 = c") {
        auto ctx = jet_context(2, {"c"}, {{"c", FieldElement(1)}});
        CHECK(next_derivative(P(ctx, "u1 - c")) == RF(ctx, "1"));
    }
    SUBCASE("second order relation u0 u2 = u1") {
        auto ctx = jet_context(3);
        CHECK(next_derivative(P(ctx, "u0*u2 - u1")) == RF(ctx, "(u2 - u1*u2)/u0"));
    }
    SUBCASE("degenerate resolvent is rejected") {
        auto ctx = jet_context(2);
        CHECK_THROWS(next_derivative(P(ctx, "u0^2 - 1")));
    }
}

TEST_CASE("compiling explicit equations") {
    SUBCASE("delta x = x/(x+1)") {
        auto jets = jet_context(1);
        OdeSpec spec = make_explicit_ode(1, P(jets, "u0"), P(jets, "u0 + 1"));
        CompiledDVariety c = compile(spec);
        const ContextPtr &ctx = c.dvariety.context();
        CHECK(ctx->vars == std::vector<std::string>{"u0", "w"});
        REQUIRE(c.dvariety.variety().gens().size() == 1);
        CHECK(c.dvariety.variety().gens()[0] == P(ctx, "w*(u0 + 1) - 1"));
        CHECK(c.dvariety.section().components[0] == P(ctx, "u0*w"));
        CHECK(c.dvariety.section().components[1] == P(ctx, "-u0*w^3"));
        CHECK(generic_type_dimension(c.dvariety) == 1);
    }
    SUBCASE("delta x = 1 keeps the line, with a unit localizer") {
        auto jets = jet_context(1);
        OdeSpec spec = make_explicit_ode(1, P(jets, "1"), P(jets, "1"));
        CompiledDVariety c = compile(spec);
        const ContextPtr &ctx = c.dvariety.context();
        REQUIRE(c.dvariety.variety().gens().size() == 1);
        CHECK(c.dvariety.variety().gens()[0] == P(ctx, "w - 1"));
        CHECK(induced_derivation(c.dvariety, P(ctx, "u0")) == P(ctx, "1"));
        CHECK(generic_type_dimension(c.dvariety) == 1);
    }
}

TEST_CASE("compiling implicit equations") {
    SUBCASE("x x'' = x' as a 4-variable D-variety") {
        auto jets = jet_context(3);
        OdeSpec spec = make_implicit_ode(2, P(jets, "u0*u2 - u1"));
        CompiledDVariety c = compile(spec);
        CHECK(c.dvariety.context()->nvars() == 4);
        CHECK(generic_type_dimension(c.dvariety) == 2);
        CHECK(c.localizer == "w");
        // The compiled top-jet delta agrees with the induced derivation.
        const ContextPtr &ctx = c.dvariety.context();
        Polynomial top = Polynomial::variable(ctx, 2);
        Polynomial via_section =
            normal_form(c.dvariety.section().components[2], c.dvariety.variety().basis()).remainder;
        CHECK(induced_derivation(c.dvariety, top) == via_section);
    }
    SUBCASE("first order implicit form of the Kolchin equation") {
        auto jets = jet_context(2);
        OdeSpec spec = make_implicit_ode(1, P(jets, "u1*(u0+1) - u0"));
        CompiledDVariety c = compile(spec);
        CHECK(generic_type_dimension(c.dvariety) == 2);
    }
}

TEST_CASE("type signatures") {
    SUBCASE("Kolchin equation, explicit form") {
        auto jets = jet_context(1);
        OdeSpec spec = make_explicit_ode(1, P(jets, "u0"), P(jets, "u0 + 1"));
        TypeSignature sig = type_signature(spec);
        CHECK(sig.ell == 1);
        auto ext = jet_context(2);
        CHECK(sig.g == P(ext, "u0*u1 + u1 - u0"));
    }
    SUBCASE("implicit forms pass through cleared") {
        auto jets = jet_context(3);
        TypeSignature sig = type_signature(make_implicit_ode(2, P(jets, "u0*u2 - u1")));
        CHECK(sig.ell == 2);
        CHECK(sig.g == P(jets, "u0*u2 - u1"));
    }
    SUBCASE("normalization removes common factors and signs") {
        auto jets = jet_context(1);
        TypeSignature a = type_signature(make_explicit_ode(1, P(jets, "u0"), P(jets, "1")));
        TypeSignature b = type_signature(make_explicit_ode(1, P(jets, "2*u0"), P(jets, "2")));
        CHECK(a == b);
        TypeSignature c = type_signature(make_explicit_ode(1, P(jets, "-u0"), P(jets, "-1")));
        CHECK(a == c);
    }
    SUBCASE("scaling by a base-field element is invisible") {
        auto jets = jet_context(2, {"c"}, {{"c", FieldElement(1)}});
        Polynomial p = P(jets, "u1*(u0+1) - u0");
        TypeSignature a = type_signature(make_implicit_ode(1, p));
        TypeSignature b = type_signature(make_implicit_ode(1, P(jets, "c") * p));
        CHECK(a == b);
    }
}

TEST_CASE("dimension law: explicit compilations have dimension ell") {
    auto check_dim = [&](const std::string &num, const std::string &den, int order) {
        auto jets = jet_context(order);
        OdeSpec spec = make_explicit_ode(order, P(jets, num), P(jets, den));
        CHECK(generic_type_dimension(compile(spec).dvariety) == type_signature(spec).ell);
    };
    check_dim("u0", "u0 + 1", 1);
    check_dim("u0^2 - 1", "1", 1);
    check_dim("u1", "u0", 2);
    check_dim("u0*u1 + u2", "u2^2 + 1", 3);
}

TEST_CASE("compiled sections always validate") {
    // compile() asserts validation internally; exercise a few shapes.
    auto jets1 = jet_context(1, {"c"}, {{"c", FieldElement(1)}});
    CHECK_NOTHROW(compile(make_explicit_ode(1, P(jets1, "c*u0"), P(jets1, "u0 - c"))));
    auto jets2 = jet_context(3);
    CHECK_NOTHROW(compile(make_implicit_ode(2, P(jets2, "u2^2 - u0*u1"))));
    CHECK_NOTHROW(compile(make_implicit_ode(2, P(jets2, "u2*u1*u0 - 1"))));
}
