#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "hyperdeg/core.hpp"
#include "hyperdeg/errors.hpp"
#include "hyperdeg/oracle.hpp"

using namespace hyperdeg;

namespace {

DegreeSequence seq(std::uint32_t r, std::vector<std::uint32_t> degrees) {
    return DegreeSequence(r, std::move(degrees));
}

std::map<std::uint64_t, bigint> classes(std::initializer_list<std::pair<std::uint64_t, int>> init) {
    std::map<std::uint64_t, bigint> out;
    for (auto [ell, n] : init) out[ell] = n;
    return out;
}

}  // namespace

TEST_CASE("census of (2,2,1,1) with edge size 3") {
    ExactCensus c = census(seq(3, {2, 2, 1, 1}));
    CHECK(c.lambda_size == 10);
    CHECK(c.lambda_plus_size == 10);
    CHECK(c.class_sizes == classes({{0, 4}, {1, 4}, {2, 2}}));
    CHECK(c.simple_count == 4);
    CHECK(c.p_simple == bigrat(2, 5));
    CHECK(c.hypergraph_count == 1);
    CHECK(c.cap_n == 12);
}

TEST_CASE("census of six degree-one vertices") {
    ExactCensus c = census(seq(3, {1, 1, 1, 1, 1, 1}));
    CHECK(c.lambda_size == 10);
    CHECK(c.lambda_plus_size == 10);
    CHECK(c.class_sizes == classes({{0, 10}}));
    CHECK(c.simple_count == 10);
    CHECK(c.p_simple == bigrat(1, 1));
    CHECK(c.hypergraph_count == 10);
}

TEST_CASE("census of (2,2,2): no simple outcome exists") {
    ExactCensus c = census(seq(3, {2, 2, 2}));
    CHECK(c.lambda_size == 10);
    CHECK(c.lambda_plus_size == 6);
    CHECK(c.class_sizes == classes({{2, 6}}));
    CHECK(c.simple_count == 0);
    CHECK(c.p_simple == bigrat(0, 1));
    CHECK(c.hypergraph_count == 0);
}

TEST_CASE("census of (3,3,3)") {
    ExactCensus c = census(seq(3, {3, 3, 3}));
    CHECK(c.lambda_size == 280);
    CHECK(c.lambda_plus_size == 216);
    CHECK(c.class_sizes == classes({{2, 162}, {3, 54}}));
    CHECK(c.simple_count == 0);
    CHECK(c.hypergraph_count == 0);
}

TEST_CASE("census of (2,2,2,1,1) with edge size 4") {
    ExactCensus c = census(seq(4, {2, 2, 2, 1, 1}));
    CHECK(c.lambda_size == 35);
    CHECK(c.lambda_plus_size == 24);
    CHECK(c.class_sizes == classes({{1, 12}, {2, 12}}));
    CHECK(c.simple_count == 8);
    CHECK(c.p_simple == bigrat(8, 35));
    CHECK(c.hypergraph_count == 1);
    CHECK(c.cap_n == 21);
}

TEST_CASE("census of the 2-regular instance on six vertices") {
    ExactCensus c = census(seq(3, {2, 2, 2, 2, 2, 2}));
    CHECK(c.lambda_size == 15400);
    CHECK(c.lambda_plus_size == 14760);
    CHECK(c.class_sizes ==
          classes({{0, 4800}, {1, 5760}, {2, 2880}, {3, 960}, {4, 360}}));
    CHECK(c.p_simple == bigrat(24, 77));
    CHECK(c.simple_count == 4800);
    CHECK(c.hypergraph_count == 75);
}

TEST_CASE("census of (2,2,2,1,1,1)") {
    ExactCensus c = census(seq(3, {2, 2, 2, 1, 1, 1}));
    CHECK(c.lambda_size == 280);
    CHECK(c.lambda_plus_size == 276);
    CHECK(c.class_sizes == classes({{0, 120}, {1, 108}, {2, 42}, {3, 6}}));
    CHECK(c.simple_count == 120);
    CHECK(c.p_simple == bigrat(3, 7));
    CHECK(c.hypergraph_count == 15);
}

TEST_CASE("enumeration count always matches the closed form") {
    for (auto& degrees : std::vector<std::vector<std::uint32_t>>{
             {1, 1, 1}, {2, 1}, {3}, {2, 2, 1, 1}, {3, 3, 3}, {2, 2, 2, 2, 1}}) {
        DegreeSequence k = seq(3, degrees);
        std::uint64_t visits = 0;
        enumerate_partitions(k, [&](const Partition&) { ++visits; });
        CHECK(bigint(visits) == partition_space_size(k));
    }
}

TEST_CASE("enumeration visits canonical, distinct partitions") {
    DegreeSequence k = seq(3, {2, 2, 1, 1});
    std::set<std::vector<point_t>> seen;
    enumerate_partitions(k, [&](const Partition& q) {
        Partition copy(q.r(), q.flat());  // re-canonicalize
        CHECK(copy.flat() == q.flat());
        CHECK(seen.insert(q.flat()).second);
    });
    CHECK(seen.size() == 10);
}

TEST_CASE("the empty instance has exactly one (empty) partition") {
    DegreeSequence k = seq(3, {0, 0});
    ExactCensus c = census(k);
    CHECK(c.lambda_size == 1);
    CHECK(c.lambda_plus_size == 1);
    CHECK(c.simple_count == 1);
    CHECK(c.p_simple == bigrat(1, 1));
    CHECK(c.hypergraph_count == 1);
    CHECK(enumerate_simple_hypergraphs(k) == 1);
}

TEST_CASE("the edge-set backtracker agrees with the partition census") {
    for (auto& [r, degrees] : std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>{
             {3, {2, 2, 1, 1}},
             {3, {1, 1, 1, 1, 1, 1}},
             {3, {2, 2, 2}},
             {3, {3, 3, 3}},
             {3, {2, 2, 2, 1, 1, 1}},
             {4, {2, 2, 2, 1, 1}},
             {4, {1, 1, 1, 1}}}) {
        DegreeSequence k = seq(r, degrees);
        CHECK(enumerate_simple_hypergraphs(k) == census(k).hypergraph_count);
    }
}

TEST_CASE("frozen hypergraph counts") {
    CHECK(enumerate_simple_hypergraphs(seq(3, {2, 2, 1, 1})) == 1);
    CHECK(enumerate_simple_hypergraphs(seq(3, {1, 1, 1, 1, 1, 1})) == 10);
    CHECK(enumerate_simple_hypergraphs(seq(3, {2, 2, 2})) == 0);
    CHECK(enumerate_simple_hypergraphs(seq(3, {2, 2, 2, 2, 2, 2}), 8, 12) == 75);
    CHECK(enumerate_simple_hypergraphs(seq(3, {1, 1, 1})) == 1);
    CHECK(enumerate_simple_hypergraphs(seq(3, {3})) == 0);  // fewer vertices than r
}

TEST_CASE("class ratios of the 2-regular instance") {
    ExactCensus c = census(seq(3, {2, 2, 2, 2, 2, 2}));
    CHECK(exact_ratio(c, 1) == bigrat(6, 5));
    CHECK(exact_ratio(c, 2) == bigrat(1, 2));
    CHECK(exact_ratio(c, 3) == bigrat(1, 3));
    CHECK(exact_ratio(c, 4) == bigrat(3, 8));
    CHECK_THROWS_AS(exact_ratio(c, 0), precondition_error);
    CHECK(exact_ratio(c, 5) == bigrat(0, 1));                // numerator class empty
    CHECK_THROWS_AS(exact_ratio(c, 6), precondition_error);  // denominator class empty
    CHECK(exact_ratio(seq(3, {2, 2, 2, 2, 2, 2}), 2) == bigrat(1, 2));
}

TEST_CASE("a missing numerator class gives a zero ratio") {
    ExactCensus c = census(seq(3, {2, 2, 1, 1}));  // classes 0,1,2 present
    CHECK(exact_ratio(c, 1) == bigrat(1, 1));
    CHECK(exact_ratio(c, 2) == bigrat(1, 2));
    CHECK(exact_ratio(c, 3) == bigrat(0, 1));                // numerator class empty
    CHECK_THROWS_AS(exact_ratio(c, 4), precondition_error);  // denominator class empty
    ExactCensus c2 = census(seq(3, {2, 2, 2}));
    CHECK(exact_ratio(c2, 3) == bigrat(0, 1));
}

TEST_CASE("caps are enforced") {
    DegreeSequence big = seq(3, {2, 2, 2, 2, 2, 2, 2, 2, 2});  // M = 18
    CHECK_THROWS_AS(census(big), cap_exceeded_error);
    CHECK_THROWS_AS(enumerate_partitions(big, [](const Partition&) {}), cap_exceeded_error);
    CHECK_THROWS_AS(enumerate_simple_hypergraphs(big), cap_exceeded_error);
    CHECK_THROWS_AS(enumerate_simple_hypergraphs(seq(3, {1, 1, 1, 1, 1, 1, 1, 1, 1}), 8, 12),
                    cap_exceeded_error);  // nine positive-degree vertices
    // raising the cap unblocks enumeration just above the default
    DegreeSequence wide = seq(3, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1});  // M = 15
    CHECK_THROWS_AS(census(wide), cap_exceeded_error);
    CHECK(census(wide, 15).lambda_size == partition_space_size(wide));
    // a divisibility failure is reported before the cap
    CHECK_THROWS_AS(census(seq(3, {2, 2, 1})), divisibility_error);
}

TEST_CASE("parallel census matches the serial one") {
    for (auto& degrees : std::vector<std::vector<std::uint32_t>>{
             {2, 2, 1, 1}, {2, 2, 2, 2, 2, 2}, {3, 3, 3}}) {
        DegreeSequence k = seq(3, degrees);
        ExactCensus serial = census(k, kDefaultCapM, 1);
        ExactCensus parallel = census(k, kDefaultCapM, 2);
        CHECK(serial.lambda_size == parallel.lambda_size);
        CHECK(serial.lambda_plus_size == parallel.lambda_plus_size);
        CHECK(serial.class_sizes == parallel.class_sizes);
        CHECK(serial.simple_count == parallel.simple_count);
        CHECK(serial.hypergraph_count == parallel.hypergraph_count);
    }
}

TEST_CASE("collect_classes sizes mirror the census") {
    DegreeSequence k = seq(3, {2, 2, 2, 1, 1, 1});
    auto by_ell = collect_classes(k);
    ExactCensus c = census(k);
    REQUIRE(by_ell.size() == c.class_sizes.size());
    for (auto& [ell, members] : by_ell) {
        CHECK(c.class_sizes.at(ell) == bigint(members.size()));
        CellLayout layout(k);
        for (const auto& q : members)
            CHECK(loop_part_count(q, layout) == ell);
    }
}
