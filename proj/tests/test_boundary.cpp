#include <doctest.h>

#include "helpers.hpp"

using namespace horo;
using th::W;

TEST_CASE("vertex arc measures") {
    CHECK(arc_measure_v(Arc{W("1")}, 2) == Rat(1, 3));
    CHECK(arc_measure_v(Arc{word_parse("012", 3)}, 3) == Rat(1, 36));
    CHECK_THROWS_AS(arc_measure_v(Arc{{}}, 2), error);
    // depth-1 arcs: q+1 of them, each 1/(q+1)
    for (int q : {2, 3}) {
        Rat sum(0);
        for (auto& a : partition(q, 1)) {
            CHECK(arc_measure_v(a, q) == Rat(1, q + 1));
            sum += arc_measure_v(a, q);
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("partition refinement and normalization") {
    CHECK(partition(2, 2).size() == 6);
    CHECK(partition(3, 1).size() == 4);
    for (int q : {2, 3})
        for (int D = 1; D <= 6; ++D) {
            Rat sum(0);
            for (auto& a : partition(q, D)) sum += arc_measure_v(a, q);
            CHECK(sum == 1);
        }
    // each depth-D arc splits into q children of equal measure
    for (int q : {2, 3})
        for (int D = 1; D <= 4; ++D)
            for (auto& a : partition(q, D)) {
                Rat child_total(0);
                int children = 0;
                for (int l = 0; l <= q; ++l) {
                    if (l == a.prefix.back()) continue;
                    Word c = a.prefix;
                    c.push_back(l);
                    CHECK(arc_measure_v(Arc{c}, q) == arc_measure_v(a, q) / q);
                    child_total += arc_measure_v(Arc{c}, q);
                    ++children;
                }
                CHECK(children == q);
                CHECK(child_total == arc_measure_v(a, q));
            }
}

TEST_CASE("edge arc measures") {
    int q = 2;
    // the two sides of e0 each carry mass 1/2
    for (int D = 1; D <= 5; ++D) {
        Rat side0(0), side1(0), total(0);
        for (auto& a : partition(q, D)) {
            Rat m = arc_measure_e(a, q);
            total += m;
            (a.prefix[0] == 0 ? side0 : side1) += m;
        }
        CHECK(total == 1);
        CHECK(side0 == Rat(1, 2));
        CHECK(side1 == Rat(1, 2));
    }
    CHECK(arc_measure_e(Arc{W("1")}, q) == Rat(1, 4));  // subtending edge at distance 1
    CHECK(arc_measure_e(Arc{W("01")}, q) == Rat(1, 4)); // distance 1, far side of e0
    CHECK(arc_measure_e(Arc{W("10")}, q) == Rat(1, 8)); // distance 2
    // refinement
    for (int D = 1; D <= 4; ++D)
        for (auto& a : partition(q, D)) {
            Rat child_total(0);
            for (int l = 0; l <= q; ++l) {
                if (l == a.prefix.back()) continue;
                Word c = a.prefix;
                c.push_back(l);
                child_total += arc_measure_e(Arc{c}, q);
            }
            CHECK(child_total == arc_measure_e(a, q));
        }
}

TEST_CASE("tube measures and chart independence") {
    int q = 2;
    Arc a{W("1")};
    CHECK(xi_tube_measure(a, 0, q) == arc_measure_v(a, q));
    CHECK(xi_tube_measure(a, 2, q) == Rat(4, 3));
    // mass of the special section (n = 0 over all arcs) is 1
    for (int D : {1, 3}) {
        Rat mass(0);
        for (auto& arc : partition(q, D)) mass += xi_tube_measure(arc, 0, q);
        CHECK(mass == 1);
    }
    // re-based chart: nu_v1(arc) = q^{h(v1, arc)} nu_v0(arc); total mass 1, and
    // q^{n - h} nu_v1 reproduces the tube measure
    int D = 4;
    auto arcs = partition(q, D);
    for (auto& v1 : ball_vertices(q, 2)) {
        Rat mass(0);
        for (auto& arc : arcs) {
            int h = h_index_v(v1, arc.prefix);
            Rat nu1 = qpow(q, h) * arc_measure_v(arc, q);
            mass += nu1;
            for (int n : {-1, 0, 2}) CHECK(qpow(q, n - h) * nu1 == xi_tube_measure(arc, n, q));
        }
        CHECK(mass == 1);
    }
}
