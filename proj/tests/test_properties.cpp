#include <doctest.h>

#include "support.hpp"

using namespace orekit;
using namespace orekit::testing;

namespace {

void check(const PropertyResult& r) {
    INFO(r.name << ": " << r.cases << " cases, " << r.failures << " failures, " << r.skipped << " skipped");
    INFO(r.first_failure);
    CHECK(r.cases >= 100);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("property: adjoint is an involutive anti-homomorphism") { check(prop_adjoint(0x5eed0001)); }

TEST_CASE("property: compatibility conditions compose to zero") { check(prop_cc_compose(0x5eed0002)); }

TEST_CASE("property: normal forms and the Janet criterion") { check(prop_normal_form(0x5eed0003)); }

TEST_CASE("property: parser round trip and fuzz") { check(prop_parser(0x5eed0004)); }
