#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "meander/billiards.hpp"
#include "meander/enumeration.hpp"
#include "meander/errors.hpp"
#include "meander/oeis.hpp"

using namespace meander;

namespace {
using Counts = std::vector<std::int64_t>;
}

TEST_CASE("pair distribution rows") {
    CHECK(table_pairs(1).counts == Counts{1});
    CHECK(table_pairs(4).counts == Counts{42, 84, 56, 14});
    CHECK(table_pairs(5).counts == Counts{262, 640, 580, 240, 42});
}

TEST_CASE("single distribution rows") {
    CHECK(table_single(2).counts == Counts{1, 1});
    CHECK(table_single(5).counts == Counts{10, 16, 11, 4, 1});
    CHECK(table_single(6).counts == Counts{24, 48, 37, 17, 5, 1});
    CHECK(table_single(7).counts == Counts{66, 140, 126, 66, 24, 6, 1});
}

TEST_CASE("row sums and the diagonal") {
    for (int n = 1; n <= 5; ++n) {
        DistributionRow pairs = table_pairs(n);
        std::int64_t c = static_cast<std::int64_t>(catalan(n));
        CHECK(pairs.total() == c * c);
        CHECK(pairs.counts[static_cast<std::size_t>(n - 1)] == c);
        CHECK(table_single(n).total() == c);
    }
}

TEST_CASE("sweeps are deterministic across worker counts") {
    SweepOptions one;
    one.threads = 1;
    SweepOptions many;
    many.threads = 4;
    CHECK(table_pairs(5, one) == table_pairs(5, many));
    CHECK(table_single(7, one) == table_single(7, many));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(table_pairs(9), BoundExceeded);
    CHECK_THROWS_AS(table_single(13), BoundExceeded);
    CHECK_THROWS_AS(table_single(0), Error);

    SweepOptions wide;
    wide.max_pairs = 3;
    CHECK_THROWS_AS(table_pairs(4, wide), BoundExceeded);
    CHECK(table_pairs(3, wide).counts == Counts{8, 12, 5});
}

TEST_CASE("signed sums") {
    CHECK(signed_sum_single(3) == -1);
    CHECK(signed_sum_single(4) == 0);
    CHECK(signed_sum_pairs(5) == -4);
    for (int n = 1; n <= 8; ++n) {
        std::int64_t want =
            n % 2 == 0 ? 0 : -static_cast<std::int64_t>(catalan((n - 1) / 2));
        CHECK(signed_sum_single(n) == want);
    }
    for (int n = 1; n <= 5; ++n) {
        std::int64_t c = static_cast<std::int64_t>(catalan((n - 1) / 2));
        std::int64_t want = n % 2 == 0 ? 0 : -c * c;
        CHECK(signed_sum_pairs(n) == want);
    }
}

TEST_CASE("restricted families and excesses") {
    CHECK(signed_sum_A(3) == 0);
    CHECK(motzkin_excess(2) == 0);

    // B_3 = {Z*_3} with traj1 = 2; Riordan_3 = {UHD}.
    CHECK(signed_sum_B(3) == 1);
    CHECK(riordan_excess(3) == -1);

    CHECK(table_A(3).total() == 2);
    CHECK(table_B(3).total() == 1);
    for (int n = 1; n <= 7; ++n) {
        CHECK(table_A(n).total() == static_cast<std::int64_t>(motzkin_number(n - 1)));
        CHECK(table_B(n).total() == static_cast<std::int64_t>(riordan_number(n)));
    }

    for (int n = 1; n <= 8; ++n) {
        int sign = ((n + 2) / 2) % 2 == 0 ? 1 : -1;
        CHECK(signed_sum_A(n + 1) == sign * motzkin_excess(n));
        if (n >= 2) {
            CHECK(signed_sum_B(n) == sign * -riordan_excess(n));
        }
    }
}

TEST_CASE("verify_all passes at reduced bounds") {
    VerifyOptions options;
    options.n_single = 6;
    options.n_pairs = 3;
    VerificationReport report = verify_all(options);
    CHECK(report.all_pass());
    CHECK(report.claims.size() == verify_claim_ids().size());
    for (const ClaimResult& c : report.claims) {
        CAPTURE(c.id);
        CAPTURE(c.counterexample);
        CHECK(c.pass);
        CHECK(c.counterexample.empty());
    }
}

TEST_CASE("verify_all claim filter") {
    VerifyOptions options;
    options.n_single = 7;
    options.n_pairs = 3;
    options.claims = {"eq1", "eq2"};
    VerificationReport report = verify_all(options);
    REQUIRE(report.claims.size() == 2);
    CHECK(report.claims[0].id == "eq1");
    CHECK(report.claims[1].id == "eq2");
    CHECK(report.all_pass());
}

TEST_CASE("verify_all isolates an injected bug") {
    VerifyOptions options;
    options.n_single = 4;
    options.n_pairs = 2;
    options.claims = {"thm1.1-single"};
    const std::string victim = "NNEE";
    options.traj_fn = [&](const DyckPath& p, const DyckPath& q) {
        int real = traj(p, q);
        return p.word() == victim && q.word() == "NNEE" ? real + 1 : real;
    };
    VerificationReport report = verify_all(options);
    CHECK(!report.all_pass());
    REQUIRE(report.claims.size() == 1);
    const ClaimResult& failing = report.claims[0];
    CHECK(!failing.pass);
    CHECK(failing.counterexample.find(victim) != std::string::npos);
}

TEST_CASE("OEIS comparisons match the bundled references") {
    OeisComparison motzkin = compare_oeis(OeisId::A001006, 10);
    CHECK(motzkin.all_match());
    CHECK(motzkin.entries.size() == 11);

    OeisComparison riordan = compare_oeis(OeisId::A005043, 10);
    CHECK(riordan.all_match());

    OeisComparison semi = compare_oeis(OeisId::A046726, 6);
    CHECK(semi.all_match());
    CHECK(semi.entries.size() == 21);  // triangle rows 1..6

    OeisComparison pairs = compare_oeis(OeisId::A008828, 5);
    CHECK(pairs.all_match());

    CHECK_THROWS_AS(parse_oeis_id("A000000"), UnknownSequence);
    CHECK(oeis_name(parse_oeis_id("A008828")) == "A008828");

    CHECK(oeis_to_csv(motzkin).rfind("label,computed,reference,match\n", 0) == 0);
    CHECK(oeis_to_json(motzkin).find("\"all_match\": true") != std::string::npos);
}
