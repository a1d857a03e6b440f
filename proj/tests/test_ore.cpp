#include <doctest.h>

#include "support.hpp"

using namespace orekit;
using namespace orekit::testing;

namespace {

FieldPtr F2 = plain_field(2);

ScalarOp d(int i) { return Row::unit(0, unit_index(i)); }
ScalarOp coef(const RatFunc& a) { return Row::unit(0, {}, a); }
RatFunc x(int i) { return RatFunc(Polynomial::symbol(F2->var(i))); }

}  // namespace

TEST_CASE("commutation rule d a = a d + da") {
    // d1 * x1 = x1 d1 + 1
    CHECK(op_mul(d(0), coef(x(0))) == Row::unit(0, unit_index(0), x(0)) + coef(1));
    CHECK(op_mul(d(1), coef(x(0))) == Row::unit(0, unit_index(1), x(0)));
    CHECK(op_mul(d(0), d(1)) == op_mul(d(1), d(0)));
}

TEST_CASE("formal adjoint") {
    CHECK(adjoint(d(0)) == -d(0));
    // ad(a d1) = -d1 a = -a d1 - a'
    CHECK(adjoint(Row::unit(0, unit_index(0), x(0) * x(0))) ==
          -Row::unit(0, unit_index(0), x(0) * x(0)) - coef(RatFunc(2) * x(0)));
    OpMatrix A(2, 2, {Row::unit(0, unit_index(0)) + Row::unit(1, {}, x(1)), Row::unit(1, unit_index(1))});
    OpMatrix adA = adjoint(A);
    CHECK(adA.nrows() == 2);
    CHECK(adA.cols == 2);
    CHECK(adA.entry(0, 0) == -d(0));
    CHECK(adA.entry(1, 0) == coef(x(1)));
    CHECK(adA.entry(1, 1) == -d(1));
}

TEST_CASE("composition and sections") {
    OpMatrix A(2, 1, {Row::unit(0, unit_index(0)), Row::unit(0, unit_index(1))});
    OpMatrix B(2, 2, {Row::unit(0, unit_index(1)) - Row::unit(1, unit_index(0))});
    CHECK(compose(B, A).is_zero());
    CHECK_THROWS_AS(compose(A, A), DimensionMismatch);
    std::vector<RatFunc> s{x(0) * x(0) * x(1)};
    auto As = apply_to_section(A, s);
    REQUIRE(As.size() == 2);
    CHECK(As[0] == RatFunc(2) * x(0) * x(1));
    CHECK(As[1] == x(0) * x(0));
    CHECK(apply_to_section(B, As)[0].is_zero());
}

TEST_CASE("rows and matrices") {
    Row r = Row::unit(1, unit_index(0), 2) + Row::unit(0, {}, x(0));
    CHECK(r.order() == 1);
    CHECK(r.uses_comp(1));
    CHECK((r - r).is_zero());
    CHECK(r.shifted(1).uses_comp(2));
    CHECK(r.restricted(0, 1) == Row::unit(0, {}, x(0)));
    CHECK(r.to_string(*F2, {"u", "v"}) == "x1*u + 2*d1(v)");
    OpMatrix I = OpMatrix::identity(2, 3);
    CHECK(I.nrows() == 3);
    CHECK(adjoint(I) == I);
    CHECK(default_label("mu", 0) == "mu1");
}
