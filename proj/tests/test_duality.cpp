#include <doctest.h>

#include "support.hpp"

using namespace orekit;
using namespace orekit::testing;

TEST_CASE("identity is injective without conditions") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    auto k = kernel_analysis(ctx, OpMatrix::identity(2, 2));
    CHECK(k.injective);
    CHECK_FALSE(k.conditional);
    CHECK(k.conditions.empty());
}

TEST_CASE("zero operator is torsion free and parametrized by the identity") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix Z(2, 2);
    auto dd = double_duality_test(ctx, Z);
    CHECK(dd.torsion_free);
    CHECK(dd.extra.empty());
    auto p = parametrize(ctx, Z);
    CHECK(module_equal(ctx, p.op, OpMatrix::identity(2, 2)));
    CHECK(p.potentials == 2);
    CHECK(torsion(ctx, Z).empty());
}

TEST_CASE("divergence is parametrized by the curl") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix div(2, 2, {Row::unit(0, unit_index(0)) + Row::unit(1, unit_index(1))});
    auto p = parametrize(ctx, div);
    CHECK(compose(div, p.op).is_zero());
    CHECK(p.potentials == 1);
    CHECK(p.rank_bound == 1);
    CHECK(p.minimal);
    CHECK(module_equal(ctx, compatibility_conditions(ctx, p.op), div));
}

TEST_CASE("torsion makes parametrization fail with certificates") {
    // d1 y1 = 0 in two unknowns: y1 is torsion
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix A(2, 2, {Row::unit(0, unit_index(0))});
    CHECK_THROWS_AS(parametrize(ctx, A), NotParametrizable);
    auto t = torsion(ctx, A);
    REQUIRE(t.size() == 1);
    CHECK(verify_certificate(A, t[0]));
    CHECK_FALSE(t[0].annihilators.empty());
    auto free_part = torsion_certificate(ctx, A, Row::unit(1));
    CHECK(free_part.annihilators.empty());
}

TEST_CASE("double duality invariants on the corpus") {
    for (const char* stem : {"ex3_1", "ex3_5_flat", "medolaghi_c0", "medolaghi_c1", "contact_phi"}) {
        auto s = corpus_system(stem);
        Context ctx(s.field, PivotPolicy::record);
        s.apply_assumptions(ctx);
        auto dd = double_duality_test(ctx, s.op);
        CAPTURE(stem);
        CHECK(compose(dd.recovered, dd.parametrizing).is_zero());
        CHECK(compose(adjoint(dd.parametrizing), dd.adjoint).is_zero());
        CHECK(module_contains(ctx, dd.recovered, s.op));
        CHECK(dd.torsion_free == dd.extra.empty());
    }
}

TEST_CASE("ext of a free module") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix Z(2, 1);
    auto e0 = ext(ctx, Z, 0);
    CHECK_FALSE(e0.vanishes);
    CHECK(ext(ctx, Z, 1).vanishes);
}

TEST_CASE("ext of D/D(d1, d2)") {
    // coker of the gradient: the constants, ext^2 != 0 only
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix grad(2, 1, {Row::unit(0, unit_index(0)), Row::unit(0, unit_index(1))});
    auto R = resolution(ctx, grad, 4);
    CHECK(euler_rank(R) == 0);
    CHECK(ext(ctx, R, 0).vanishes);
    CHECK(ext(ctx, R, 1).vanishes);
    CHECK_FALSE(ext(ctx, R, 2).vanishes);
}
