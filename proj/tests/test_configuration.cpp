#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hyperdeg/configuration.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/errors.hpp"
#include "hyperdeg/rng.hpp"

using namespace hyperdeg;

namespace {

DegreeSequence seq(std::uint32_t r, std::vector<std::uint32_t> degrees) {
    return DegreeSequence(r, std::move(degrees));
}

}  // namespace

TEST_CASE("cell layout maps points to consecutive cells") {
    DegreeSequence k = seq(3, {2, 2, 1, 1});
    CellLayout layout(k);
    CHECK(layout.M() == 6);
    CHECK(layout.n() == 4);
    CHECK(layout.cell_of(0) == 0);
    CHECK(layout.cell_of(1) == 0);
    CHECK(layout.cell_of(2) == 1);
    CHECK(layout.cell_of(3) == 1);
    CHECK(layout.cell_of(4) == 2);
    CHECK(layout.cell_of(5) == 3);
    CHECK(layout.cell_begin(1) == 2);
    CHECK(layout.cell_begin(3) == 5);
    CHECK(layout.cell_size(0) == 2);
    CHECK(layout.cell_size(3) == 1);
}

TEST_CASE("canonicalize_parts sorts within and across parts") {
    std::vector<point_t> flat{5, 3, 2, 4, 1, 0};
    canonicalize_parts(3, flat);
    CHECK(flat == std::vector<point_t>{0, 1, 4, 2, 3, 5});
}

TEST_CASE("canonicalize_parts rejects bad input") {
    std::vector<point_t> dup{0, 0, 1, 2, 3, 4};
    CHECK_THROWS_AS(canonicalize_parts(3, dup), precondition_error);
    std::vector<point_t> gap{0, 1, 2, 3, 4, 6};
    CHECK_THROWS_AS(canonicalize_parts(3, gap), precondition_error);
    std::vector<point_t> ragged{0, 1, 2, 3};
    CHECK_THROWS_AS(canonicalize_parts(3, ragged), precondition_error);
    std::vector<point_t> empty_r{};
    CHECK_THROWS_AS(canonicalize_parts(0, empty_r), precondition_error);
}

TEST_CASE("partition constructors agree and compare by canonical form") {
    Partition a(3, {5, 3, 2, 4, 1, 0});
    Partition b = Partition::from_parts(3, {{2, 3, 5}, {0, 1, 4}});
    CHECK(a == b);
    CHECK(a.part_count() == 2);
    CHECK(a.M() == 6);
    auto p0 = a.part(0);
    CHECK(std::vector<point_t>(p0.begin(), p0.end()) == std::vector<point_t>{0, 1, 4});
    CHECK(a.parts() == std::vector<std::vector<point_t>>{{0, 1, 4}, {2, 3, 5}});
    CHECK_THROWS_AS(Partition::from_parts(3, {{0, 1}, {2, 3, 4, 5}}), precondition_error);
}

TEST_CASE("edges_of reads vertex multisets through the layout") {
    DegreeSequence k = seq(3, {2, 2, 1, 1});
    CellLayout layout(k);

    Partition loopy = Partition::from_parts(3, {{0, 1, 4}, {2, 3, 5}});
    HypergraphView hv = edges_of(loopy, layout);
    CHECK(hv.n == 4);
    CHECK(hv.edges == std::vector<std::vector<std::uint32_t>>{{1, 1, 3}, {2, 2, 4}});
    CHECK(loop_part_count(loopy, layout) == 2);
    CHECK_FALSE(is_simple(loopy, layout));

    Partition plain = Partition::from_parts(3, {{0, 2, 4}, {1, 3, 5}});
    HypergraphView hv2 = edges_of(plain, layout);
    CHECK(hv2.edges == std::vector<std::vector<std::uint32_t>>{{1, 2, 3}, {1, 2, 4}});
    CHECK(loop_part_count(plain, layout) == 0);
    CHECK(is_simple(plain, layout));
}

TEST_CASE("repeated edges are not simple and violate the overlap property") {
    DegreeSequence k = seq(3, {2, 2, 2});
    CellLayout layout(k);
    Partition q = Partition::from_parts(3, {{0, 2, 4}, {1, 3, 5}});
    CHECK_FALSE(is_simple(q, layout));

    LambdaPlusReport rep = classify_lambda_plus(q, layout, 18);
    CHECK(rep.prop_i);
    CHECK(rep.prop_ii);
    CHECK_FALSE(rep.prop_iii);
    CHECK(rep.prop_iv);
    CHECK(rep.loop_parts == 0);
    CHECK_FALSE(rep.in_lambda_plus());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].property == '3');
    CHECK(rep.violations[0].part_a == 0);
    CHECK(rep.violations[0].part_b == 1);
}

TEST_CASE("doubled cells are allowed once per part") {
    DegreeSequence k = seq(3, {2, 2, 2});
    CellLayout layout(k);
    Partition q = Partition::from_parts(3, {{0, 1, 2}, {3, 4, 5}});
    LambdaPlusReport rep = classify_lambda_plus(q, layout, 18);
    CHECK(rep.in_lambda_plus());
    CHECK(rep.loop_parts == 2);
    CHECK(rep.violations.empty());
}

TEST_CASE("a cell used three times in one part is flagged") {
    DegreeSequence k = seq(3, {3, 3, 3});
    CellLayout layout(k);
    Partition q = Partition::from_parts(3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    LambdaPlusReport rep = classify_lambda_plus(q, layout, 36);
    CHECK_FALSE(rep.prop_i);
    CHECK_FALSE(rep.in_lambda_plus());
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].property == '1');
    CHECK(rep.violations[0].part_a == 0);
    CHECK(rep.violations[0].part_b == -1);
}

TEST_CASE("two doubled cells in one part are flagged") {
    DegreeSequence k = seq(4, {2, 2, 2, 1, 1});
    CellLayout layout(k);
    Partition q = Partition::from_parts(4, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    LambdaPlusReport rep = classify_lambda_plus(q, layout, 21);
    CHECK(rep.prop_i);
    CHECK_FALSE(rep.prop_ii);
    CHECK_FALSE(rep.in_lambda_plus());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.property == '2' && v.part_a == 0) found = true;
    CHECK(found);
}

TEST_CASE("the loop-part budget is enforced against the supplied cap") {
    DegreeSequence k = seq(3, {2, 2, 2});
    CellLayout layout(k);
    Partition q = Partition::from_parts(3, {{0, 1, 2}, {3, 4, 5}});
    LambdaPlusReport rep = classify_lambda_plus(q, layout, 1);
    CHECK_FALSE(rep.prop_iv);
    CHECK(rep.loop_parts == 2);
    CHECK_FALSE(rep.in_lambda_plus());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.property == '4' && v.part_a == -1 && v.part_b == -1) found = true;
    CHECK(found);
}

TEST_CASE("for edge size 4 a simple partition can fail the overlap property") {
    DegreeSequence k = seq(4, {2, 2, 2, 1, 1});
    CellLayout layout(k);
    Partition q = Partition::from_parts(4, {{0, 2, 4, 6}, {1, 3, 5, 7}});
    CHECK(is_simple(q, layout));
    LambdaPlusReport rep = classify_lambda_plus(q, layout, 21);
    CHECK_FALSE(rep.prop_iii);
    CHECK_FALSE(rep.in_lambda_plus());
    HypergraphView hv = edges_of(q, layout);
    CHECK(hv.edges == std::vector<std::vector<std::uint32_t>>{{1, 2, 3, 4}, {1, 2, 3, 5}});
}

TEST_CASE("random partitions are valid, deterministic, and cover the space") {
    DegreeSequence k = seq(3, {2, 2, 1, 1});
    RandomStream rng(42);
    Partition q = random_partition(k, rng);
    CHECK(q.part_count() == 2);
    std::vector<point_t> sorted = q.flat();
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<point_t>{0, 1, 2, 3, 4, 5});

    RandomStream rng2(42);
    CHECK(random_partition(k, rng2) == q);

    DegreeSequence bad = seq(3, {2, 2, 1});
    RandomStream rng3(0);
    CHECK_THROWS_AS(random_partition(bad, rng3), divisibility_error);
}

TEST_CASE("every canonical form of the smallest space is reachable") {
    DegreeSequence k = seq(3, {1, 1, 1});
    CellLayout layout(k);
    RandomStream rng(7);
    for (int i = 0; i < 20; ++i) {
        Partition q = random_partition(k, rng);
        CHECK(q.parts() == std::vector<std::vector<point_t>>{{0, 1, 2}});
        CHECK(is_simple(q, layout));
    }
}
