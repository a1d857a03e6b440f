#include <doctest.h>

#include "support.hpp"

using namespace orekit;
using namespace orekit::testing;

TEST_CASE("identity operator has no compatibility conditions") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix C = compatibility_conditions(ctx, OpMatrix::identity(2, 3));
    CHECK(C.nrows() == 0);
    CHECK(C.cols == 3);
}

TEST_CASE("gradient has the curl as compatibility condition") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix grad(2, 1, {Row::unit(0, unit_index(0)), Row::unit(0, unit_index(1))});
    OpMatrix C = compatibility_conditions(ctx, grad);
    REQUIRE(C.nrows() == 1);
    OpMatrix curl(2, 2, {Row::unit(0, unit_index(1)) - Row::unit(1, unit_index(0))});
    CHECK(module_equal(ctx, C, curl));
    CHECK(compose(C, grad).is_zero());
}

TEST_CASE("second order condition appears in the original second members") {
    auto s = corpus_system("ex1_8");
    Context ctx(s.field);
    OpMatrix C = compatibility_conditions(ctx, s.op);
    REQUIRE(C.nrows() == 1);
    CHECK(C.order() == 2);
}

TEST_CASE("module membership") {
    FieldPtr F = plain_field(2);
    Context ctx(F);
    OpMatrix G(2, 1, {Row::unit(0, unit_index(0))});
    OpMatrix X(2, 1, {Row::unit(0, unit_index(0) + unit_index(1))});
    OpMatrix Y(2, 1, {Row::unit(0, unit_index(1))});
    CHECK(module_contains(ctx, G, X));
    CHECK_FALSE(module_contains(ctx, G, Y));
    CHECK_FALSE(module_equal(ctx, G, X));
    OpMatrix both = stack({&G, &X});
    CHECK(minimize_generators(ctx, both).nrows() == 1);
}

TEST_CASE("differential rank") {
    FieldPtr F = plain_field(3);
    Context ctx(F);
    CHECK(differential_rank(ctx, OpMatrix(3, 2)) == 0);
    auto s = corpus_system("ex3_5_unimodular");
    Context ctx2(s.field);
    CHECK(differential_rank(ctx2, s.op) == 3);
    CHECK(compatibility_conditions(ctx2, s.op).nrows() == 0);
}

TEST_CASE("sequences terminate and compose to zero") {
    for (const char* stem : {"ex1_6", "ex1_8", "ex3_5_flat", "killing2"}) {
        auto s = corpus_system(stem);
        Context ctx(s.field);
        DiffSequence seq = build_sequence(ctx, s.op);
        CHECK(seq.terminated);
        CHECK(seq.flags.formally_exact);
        for (size_t i = 0; i + 1 < seq.ops.size(); ++i) CHECK(compose(seq.ops[i + 1], seq.ops[i]).is_zero());
    }
}

TEST_CASE("augmented completion tracks the second members") {
    auto s = corpus_system("ex1_7");
    Context ctx(s.field);
    AugmentedBasis ab = augmented_completion(ctx, s.op);
    REQUIRE(ab.left.size() == ab.right.size());
    for (size_t i = 0; i < ab.left.size(); ++i) {
        Row lhs;
        for (auto& [j, c] : ab.right[i].terms())
            lhs += coef_times(c, prolong(j.mu, s.op.rows[j.comp]));
        CHECK(lhs == ab.left[i]);
    }
}
