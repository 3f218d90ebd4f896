#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necklace/verify.hpp"

using namespace necklace;

TEST_CASE("report pass/fail is driven by the failure list") {
    VerificationReport report;
    CHECK(report.passed());
    report.failures.push_back({"x", "1", "2"});
    CHECK_FALSE(report.passed());
}

TEST_CASE("verify_bound") {
    const VerificationReport report = verify_bound(16);
    CHECK(report.passed());
    CHECK(report.instances_checked == 120);  // sum of (n-1) for n = 2..16
}

TEST_CASE("verify_injectivity") {
    CHECK(verify_injectivity(9, 2).passed());
    CHECK(verify_injectivity(9, 3).passed());
}

TEST_CASE("verify_equality") {
    const VerificationReport report = verify_equality(12);
    CHECK(report.passed());
    CHECK(report.instances_checked == 66);
}

TEST_CASE("verify_witnesses") {
    CHECK(verify_witnesses(12).passed());
}

TEST_CASE("verify_oracle") {
    const VerificationReport report = verify_oracle(7, 3, 8);
    CHECK(report.passed());
    CHECK(report.instances_checked > 0);
}
