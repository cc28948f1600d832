#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "streamlet/sources.hpp"

using namespace streamlet;

TEST_CASE("pipelines are lazy until a terminal operation") {
    int mapper_calls = 0;
    int predicate_calls = 0;

    auto p = of({1, 2, 3, 4, 5})
                 .filter([&](int x) {
                     ++predicate_calls;
                     return x % 2 == 1;
                 })
                 .map([&](int x) {
                     ++mapper_calls;
                     return x * 10;
                 });

    CHECK(predicate_calls == 0);
    CHECK(mapper_calls == 0);

    CHECK(p.count() == 3);
    CHECK(predicate_calls == 5);
    CHECK(mapper_calls == 3);  // only survivors reach the map stage
}

TEST_CASE("a second terminal operation throws") {
    auto p = of({1, 2, 3});
    CHECK(p.count() == 3);
    CHECK(p.consumed());
    CHECK_THROWS_AS(p.count(), AlreadyConsumedError);
}

TEST_CASE("adding a stage after consumption throws") {
    auto p = of({1, 2, 3});
    p.count();
    CHECK_THROWS_AS(p.filter([](int) { return true; }), AlreadyConsumedError);
    CHECK_THROWS_AS(p.map([](int x) { return x; }), AlreadyConsumedError);
    CHECK_THROWS_AS(p.map_to_int([](int x) { return x; }), AlreadyConsumedError);
}

TEST_CASE("consumption is shared across chained aliases") {
    auto p = of({1, 2, 3});
    auto q = p.map([](int x) { return x + 1; });
    CHECK(q.sum() == 9);
    CHECK(p.consumed());
    CHECK_THROWS_AS(p.count(), AlreadyConsumedError);
    CHECK_THROWS_AS(q.count(), AlreadyConsumedError);
}

TEST_CASE("mode flag") {
    auto p = of({1, 2, 3});
    CHECK(p.mode() == ExecutionMode::sequential);  // default

    p.parallel();
    CHECK(p.mode() == ExecutionMode::parallel);
    p.parallel();  // idempotent
    CHECK(p.mode() == ExecutionMode::parallel);

    p.sequential();
    CHECK(p.mode() == ExecutionMode::sequential);

    p.parallel().sequential();  // last call wins
    CHECK(p.mode() == ExecutionMode::sequential);
}

TEST_CASE("mode operations on a consumed pipeline throw") {
    auto p = of({1, 2, 3});
    p.count();
    CHECK_THROWS_AS(p.parallel(), AlreadyConsumedError);
    CHECK_THROWS_AS(p.sequential(), AlreadyConsumedError);
    CHECK_THROWS_AS(p.workers(2), AlreadyConsumedError);
}

TEST_CASE("mode does not change count on a fixed source") {
    std::vector<int> source(1000);
    std::iota(source.begin(), source.end(), 0);

    auto even = [](int x) { return x % 2 == 0; };
    std::int64_t sequential = from_collection(source).sequential().filter(even).count();
    std::int64_t parallel = from_collection(source).parallel().workers(4).filter(even).count();
    CHECK(sequential == parallel);
    CHECK(sequential == 500);
}

TEST_CASE("worker override must be positive") {
    auto p = of({1, 2, 3});
    CHECK_THROWS_AS(p.workers(0), std::invalid_argument);
    CHECK_THROWS_AS(p.workers(-2), std::invalid_argument);
}

TEST_CASE("terminal operations consume even when a stage throws") {
    auto p = of({1, 2, 3}).map([](int x) -> int {
        if (x == 2) throw std::runtime_error("stage failure");
        return x;
    });
    CHECK_THROWS_AS(p.count(), std::runtime_error);
    CHECK(p.consumed());
}
