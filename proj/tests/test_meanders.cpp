#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "meander/billiards.hpp"
#include "meander/errors.hpp"
#include "meander/meanders.hpp"

using namespace meander;

namespace {
using Pairs = std::vector<std::pair<int, int>>;
}

TEST_CASE("arch configuration from a Dyck path") {
    CHECK(arch_config_from_dyck(DyckPath::parse("NNNEENNEEE")).arches ==
          Pairs{{1, 10}, {2, 5}, {3, 4}, {6, 9}, {7, 8}});
    CHECK(arch_config_from_dyck(DyckPath::parse("NE")).arches == Pairs{{1, 2}});

    for (int n = 0; n <= 7; ++n) {
        for (const DyckPath& p : enumerate_dyck(n)) {
            CHECK(dyck_from_arch_config(arch_config_from_dyck(p)) == p);
        }
    }
}

TEST_CASE("from_matching validates") {
    CHECK_THROWS_AS(ArchConfiguration::from_matching(2, {{1, 3}, {2, 4}}), Error);
    CHECK_THROWS_AS(ArchConfiguration::from_matching(2, {{1, 2}, {1, 3}}), Error);
    CHECK_THROWS_AS(ArchConfiguration::from_matching(2, {{1, 2}}), Error);
    CHECK(ArchConfiguration::from_matching(2, {{2, 3}, {4, 1}}).arches ==
          Pairs{{1, 4}, {2, 3}});
}

TEST_CASE("rainbow matching") {
    CHECK(rainbow(2).arches == Pairs{{1, 4}, {2, 3}});
    CHECK(rainbow(5).arches == Pairs{{1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 6}});
    for (int n = 1; n <= 7; ++n) {
        CHECK(rainbow(n) == arch_config_from_dyck(special_path(SpecialPath::L, n)));
    }
}

TEST_CASE("meander construction") {
    Meander t = meander_from_pair(DyckPath::parse("NNNEENNEEE"),
                                  DyckPath::parse("NNEENENNEE"));
    CHECK(t.upper.arches == Pairs{{1, 10}, {2, 5}, {3, 4}, {6, 9}, {7, 8}});
    CHECK(t.lower.arches == Pairs{{1, 4}, {2, 3}, {5, 6}, {7, 10}, {8, 9}});
    CHECK(comp(t) == 1);

    Meander nested = meander_from_pair(special_path(SpecialPath::L, 4),
                                       special_path(SpecialPath::L, 4));
    CHECK(nested.upper == rainbow(4));
    CHECK(nested.lower == rainbow(4));

    CHECK_THROWS_AS(meander_from_pair(DyckPath::parse("NE"), DyckPath::parse("NNEE")),
                    SizeMismatch);
}

TEST_CASE("inequivalent meanders of order 2") {
    std::set<std::pair<Pairs, Pairs>> distinct;
    for (const DyckPath& p : enumerate_dyck(2)) {
        for (const DyckPath& q : enumerate_dyck(2)) {
            Meander t = meander_from_pair(p, q);
            distinct.emplace(t.upper.arches, t.lower.arches);
        }
    }
    CHECK(distinct.size() == 4);
}

TEST_CASE("component counting") {
    for (int n = 1; n <= 8; ++n) {
        DyckPath l = special_path(SpecialPath::L, n);
        CHECK(comp(meander_from_pair(l, l)) == n);
    }

    // A common arch forms its own two-edge loop.
    Meander same = meander_from_pair(DyckPath::parse("NENE"), DyckPath::parse("NENE"));
    CHECK(comp(same) == 2);

    std::map<int, int> dist;
    for (const DyckPath& p : enumerate_dyck(3)) {
        for (const DyckPath& q : enumerate_dyck(3)) {
            dist[comp(meander_from_pair(p, q))] += 1;
        }
    }
    CHECK(dist == std::map<int, int>{{1, 8}, {2, 12}, {3, 5}});
}

TEST_CASE("semimeanders") {
    std::map<int, int> dist;
    for (const DyckPath& p : enumerate_dyck(5)) {
        dist[comp(semimeander_from_dyck(p))] += 1;
    }
    CHECK(dist == std::map<int, int>{{1, 10}, {2, 16}, {3, 11}, {4, 4}, {5, 1}});

    CHECK(comp(semimeander_from_dyck(special_path(SpecialPath::L, 3))) == 3);

    std::set<std::pair<Pairs, Pairs>> distinct;
    for (const DyckPath& p : enumerate_dyck(3)) {
        Meander s = semimeander_from_dyck(p);
        CHECK(s.lower == rainbow(3));
        distinct.emplace(s.upper.arches, s.lower.arches);
    }
    CHECK(distinct.size() == 5);
}

TEST_CASE("comp is reflection invariant and ranged") {
    for (int n = 1; n <= 5; ++n) {
        std::int64_t diagonal = 0;
        for (const DyckPath& p : enumerate_dyck(n)) {
            for (const DyckPath& q : enumerate_dyck(n)) {
                Meander t = meander_from_pair(p, q);
                Meander swapped{t.order, t.lower, t.upper};
                int c = comp(t);
                CHECK(comp(swapped) == c);
                CHECK(c >= 1);
                CHECK(c <= n);
                if (c == n) {
                    ++diagonal;
                    CHECK(p == q);
                }
            }
        }
        CHECK(diagonal == static_cast<std::int64_t>(catalan(n)));
    }
}

TEST_CASE("comp agrees with the billiard statistic") {
    for (int n = 1; n <= 4; ++n) {
        for (const DyckPath& p : enumerate_dyck(n)) {
            CHECK(comp(semimeander_from_dyck(p)) == traj1(p));
            for (const DyckPath& q : enumerate_dyck(n)) {
                CHECK(comp(meander_from_pair(p, q)) == traj(p, q));
            }
        }
    }
}

TEST_CASE("meander JSON round trip") {
    Meander t = meander_from_pair(DyckPath::parse("NNNEENNEEE"),
                                  DyckPath::parse("NNEENENNEE"));
    std::string json = meander_to_json(t);
    CHECK(json.find("\"n\":5") != std::string::npos);
    CHECK(json.find("\"upper\"") != std::string::npos);
    CHECK(json.find("\"lower\"") != std::string::npos);
    CHECK(meander_from_json(json) == t);

    for (const DyckPath& p : enumerate_dyck(4)) {
        Meander s = semimeander_from_dyck(p);
        CHECK(meander_from_json(meander_to_json(s)) == s);
    }
}
