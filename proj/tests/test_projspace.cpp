#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pencils/projspace.hpp"

#include <set>
#include <stdexcept>

using namespace pencils;

TEST_CASE("point enumeration order is frozen") {
    auto k2 = make_field(2, 1);
    std::vector<std::vector<Fe>> expected{
        {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1},
        {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    auto pts = enum_points(k2, 2);
    REQUIRE(pts.size() == expected.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts[i].coords == expected[i]);

    auto k3 = make_field(3, 1);
    std::vector<std::vector<Fe>> line{{1, 0}, {1, 1}, {1, 2}, {0, 1}};
    auto p1 = enum_points(k3, 1);
    REQUIRE(p1.size() == 4);
    for (std::size_t i = 0; i < p1.size(); ++i)
        CHECK(p1[i].coords == line[i]);
}

TEST_CASE("enumeration covers the space exactly once, normalized") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        auto pr = factor_prime_power(q);
        auto k = make_field(static_cast<std::uint32_t>(pr->first),
                            static_cast<std::uint32_t>(pr->second));
        auto pts = enum_points(k, 2);
        CHECK(pts.size() == point_count(q, 2));
        std::set<std::vector<Fe>> seen;
        for (const auto& p : pts) {
            // normalized: first nonzero coordinate is 1
            std::size_t lead = 0;
            while (p.coords[lead] == 0) ++lead;
            CHECK(p.coords[lead] == 1);
            seen.insert(p.coords);
        }
        CHECK(seen.size() == pts.size());
    }
    CHECK(point_count(2, 3) == 15);
    CHECK(point_count(5, 1) == 6);
    CHECK(line_count(7) == 57);
}

TEST_CASE("point_at rejects out-of-range indices") {
    auto k = make_field(2, 1);
    CHECK_THROWS_AS(point_at(k, 2, 7), std::out_of_range);
    std::vector<Fe> small(2);
    CHECK_THROWS_AS(point_at_into(k, 2, 0, small), std::invalid_argument);
}

TEST_CASE("normalization scales by the inverse of the leading entry") {
    auto k5 = make_field(5, 1);
    CHECK(normalize_coords(k5, std::vector<Fe>{2, 4, 1}) ==
          std::vector<Fe>{1, 2, 3});
    CHECK(normalize_coords(k5, std::vector<Fe>{0, 3, 3}) ==
          std::vector<Fe>{0, 1, 1});
    CHECK_THROWS_AS(normalize_coords(k5, std::vector<Fe>{0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("line basis spans exactly the declared line") {
    for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
        auto pr = factor_prime_power(q);
        auto k = make_field(static_cast<std::uint32_t>(pr->first),
                            static_cast<std::uint32_t>(pr->second));
        auto lines = enum_lines(k);
        CHECK(lines.size() == line_count(q));
        for (const auto& l : lines) {
            auto [a, b] = line_basis(l);
            // both basis points satisfy the dual equation
            for (const auto& v : {a, b}) {
                Fe acc = 0;
                for (int i = 0; i < 3; ++i)
                    acc = k->add(acc, k->mul(l.dual[i], v[i]));
                CHECK(acc == 0);
            }
            auto lp = points_on_line(l);
            CHECK(lp.points.size() == q + 1);
            std::set<std::vector<Fe>> distinct;
            for (const auto& p : lp.points) {
                CHECK(on_line(l, p));
                distinct.insert(p.coords);
            }
            CHECK(distinct.size() == q + 1);
        }
    }
}

TEST_CASE("every point pair determines the incident line") {
    auto k3 = make_field(3, 1);
    auto pts = enum_points(k3, 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            ProjLine l = line_through(pts[i], pts[j]);
            CHECK(on_line(l, pts[i]));
            CHECK(on_line(l, pts[j]));
        }
    CHECK_THROWS_AS(line_through(pts[0], pts[0]), std::invalid_argument);
}

TEST_CASE("point-line incidence counts match the plane axioms") {
    auto k4 = make_field(2, 2);
    auto pts = enum_points(k4, 2);
    auto lines = enum_lines(k4);
    // every point lies on q+1 lines, every line holds q+1 points
    for (const auto& p : pts) {
        std::size_t through = 0;
        for (const auto& l : lines)
            if (on_line(l, p)) ++through;
        CHECK(through == 5);
    }
    std::uint64_t incidences = 0;
    for (const auto& l : lines) {
        auto lp = points_on_line(l);
        incidences += lp.points.size();
    }
    CHECK(incidences == lines.size() * 5);
}

TEST_CASE("line at index round-trips through dual coordinates") {
    auto k3 = make_field(3, 1);
    auto lines = enum_lines(k3);
    std::set<std::array<Fe, 3>> seen;
    for (const auto& l : lines) seen.insert(l.dual);
    CHECK(seen.size() == 13);
    CHECK(lines[0].dual == std::array<Fe, 3>{1, 0, 0});
    CHECK(lines[12].dual == std::array<Fe, 3>{0, 0, 1});
}
