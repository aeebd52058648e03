#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "meander/billiards.hpp"
#include "meander/errors.hpp"
#include "meander/parity.hpp"

using namespace meander;

TEST_CASE("corner classification") {
    auto cc = classify_corners(DyckPath::parse("NNEE"));
    REQUIRE(cc.size() == 1);
    CHECK(cc[0].corner.kind == CornerKind::Peak);
    CHECK(!cc[0].good);  // y = 2

    cc = classify_corners(DyckPath::parse("NENE"));
    REQUIRE(cc.size() == 3);
    CHECK(cc[0].good);   // peak (0,1), odd y
    CHECK(!cc[1].good);  // valley (1,1), odd x
    CHECK(!cc[2].good);  // peak (1,2), even y

    // All three corners of the worked example are good.
    for (const CornerClass& c : classify_corners(DyckPath::parse("NNNEENNEEE"))) {
        CHECK(c.good);
    }
}

TEST_CASE("first bad corner") {
    CHECK(first_bad_corner(DyckPath::parse("NNEE")) == 2);
    CHECK(!first_bad_corner(DyckPath::parse("NNNEEE")).has_value());

    // Even size always has a bad corner: the last peak.
    for (int n : {2, 4, 6}) {
        for (const DyckPath& p : enumerate_dyck(n)) {
            CHECK(first_bad_corner(p).has_value());
        }
    }
}

TEST_CASE("phi on the small cases") {
    CHECK(phi(DyckPath::parse("NNEE")).word() == "NENE");
    CHECK(phi(DyckPath::parse("NENE")).word() == "NNEE");
    CHECK(phi(DyckPath::parse("NNNEEE")).word() == "NNNEEE");
}

TEST_CASE("phi is a sign-reversing involution") {
    for (int n = 1; n <= 7; ++n) {
        std::int64_t fixed = 0;
        for (const DyckPath& p : enumerate_dyck(n)) {
            DyckPath image = phi(p);
            CHECK(phi(image) == p);
            if (image == p) {
                ++fixed;
                CHECK(is_in_F(p));
            } else {
                CHECK(!is_in_F(p));
                int delta = traj1(p) - traj1(image);
                CHECK((delta == 1 || delta == -1));
                CHECK(first_bad_corner(image) == first_bad_corner(p));
            }
        }
        std::int64_t expected =
            n % 2 == 0 ? 0 : static_cast<std::int64_t>(catalan((n - 1) / 2));
        CHECK(fixed == expected);
    }
    // |{P in D_7 : phi(P) = P}| = c_3 = 5 is covered by n = 7 above.
}

TEST_CASE("psi acts on P first") {
    auto [p1, q1] = psi(DyckPath::parse("NNEE"), DyckPath::parse("NNEE"));
    CHECK(p1.word() == "NENE");
    CHECK(q1.word() == "NNEE");

    auto [p2, q2] = psi(DyckPath::parse("NNNEEE"), DyckPath::parse("NNEENE"));
    CHECK(p2.word() == "NNNEEE");
    CHECK(q2 == phi(DyckPath::parse("NNEENE")));

    CHECK_THROWS_AS(psi(DyckPath::parse("NE"), DyckPath::parse("NNEE")), SizeMismatch);
}

TEST_CASE("psi is an involution with fixed set F x F") {
    for (int n = 1; n <= 5; ++n) {
        std::int64_t fixed = 0;
        for (const DyckPath& p : enumerate_dyck(n)) {
            for (const DyckPath& q : enumerate_dyck(n)) {
                auto [p2, q2] = psi(p, q);
                auto [p3, q3] = psi(p2, q2);
                CHECK(p3 == p);
                CHECK(q3 == q);
                if (p2 == p && q2 == q) {
                    ++fixed;
                    CHECK(is_in_F(p));
                    CHECK(is_in_F(q));
                } else {
                    int delta = traj(p, q) - traj(p2, q2);
                    CHECK((delta == 1 || delta == -1));
                }
            }
        }
        std::int64_t c = n % 2 == 0 ? 0 : static_cast<std::int64_t>(catalan((n - 1) / 2));
        CHECK(fixed == c * c);
    }
    // Fixed points on D_3 x D_3 number c_1^2 = 1: covered by n = 3 above.
}

TEST_CASE("the fixed-point family") {
    auto f1 = enumerate_F(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].word() == "NE");

    auto f5 = enumerate_F(5);
    std::vector<std::string> words;
    for (const DyckPath& p : f5) {
        words.push_back(p.word());
    }
    std::sort(words.begin(), words.end());
    CHECK(words == std::vector<std::string>{"NNNEENNEEE", "NNNNNEEEEE"});

    for (int n = 2; n <= 8; n += 2) {
        CHECK(enumerate_F(n).empty());
        for (const DyckPath& p : enumerate_dyck(n)) {
            CHECK(!is_in_F(p));
        }
    }

    CHECK(enumerate_F(7).size() == 5);
}

TEST_CASE("enumerate_F equals the brute-force filter") {
    for (int n = 1; n <= 9; ++n) {
        std::vector<DyckPath> filtered;
        for (const DyckPath& p : enumerate_dyck(n)) {
            if (is_in_F(p)) {
                filtered.push_back(p);
            }
        }
        CHECK(enumerate_F(n) == filtered);
        if (n % 2 == 1) {
            CHECK(filtered.size() == catalan((n - 1) / 2));
        }
    }
}

TEST_CASE("halving bijection") {
    CHECK(halve_F(DyckPath::parse("NNNEENNEEE")).word() == "NENE");
    CHECK(halve_F(DyckPath::parse("NNNEEE")).word() == "NE");
    CHECK(halve_F(DyckPath::parse("NE")).word() == "");
    CHECK_THROWS_AS(halve_F(DyckPath::parse("NNEE")), NotInF);
    CHECK_THROWS_AS(fn_witness(DyckPath::parse("NENE")), NotInF);

    for (int n : {1, 3, 5, 7, 9}) {
        int k = (n - 1) / 2;
        std::set<std::string> images;
        for (const DyckPath& p : enumerate_F(n)) {
            CHECK(fn_path(fn_witness(p)) == p);
            DyckPath half = halve_F(p);
            CHECK(half.size() == k);
            CHECK(images.insert(half.word()).second);
        }
        CHECK(images.size() == catalan(k));
    }
}

TEST_CASE("witness shape") {
    FnWitness w = fn_witness(DyckPath::parse("NNNEENNEEE"));
    CHECK(w.a == std::vector<int>{1, 1});
    CHECK(w.b == std::vector<int>{1, 1});
    CHECK(w.block_count() == 2);

    FnWitness degenerate = fn_witness(DyckPath::parse("NE"));
    CHECK(degenerate.a == std::vector<int>{0});
    CHECK(degenerate.b == std::vector<int>{0});
}

TEST_CASE("traj is odd on F x F") {
    for (int n : {1, 3, 5}) {
        for (const DyckPath& p : enumerate_F(n)) {
            for (const DyckPath& q : enumerate_F(n)) {
                CHECK(traj(p, q) % 2 == 1);
            }
        }
    }
}
