#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "streamlet/sources.hpp"

using namespace streamlet;

namespace {

// Temp file removed on scope exit.
class TempFile {
  public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("streamlet_sources_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++) + ".txt");
        std::ofstream out(path_, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

template <typename T>
std::vector<T> collect(Pipeline<T> p) {
    std::vector<T> out;
    p.for_each([&out](const T& v) { out.push_back(v); });
    return out;
}

}  // namespace

TEST_CASE("of preserves list order") {
    auto words = collect(of({"bat", "cat", "bird", "mad", "catch", "ditch"}));
    CHECK(words == std::vector<std::string>{"bat", "cat", "bird", "mad", "catch", "ditch"});
}

TEST_CASE("of on an empty list") {
    CHECK(of(std::vector<int>{}).count() == 0);
}

TEST_CASE("of over doubles feeds sum") {
    CHECK(of({1.5, 2.4, -0.1}).sum() == doctest::Approx(3.8).epsilon(1e-12));
}

TEST_CASE("from_collection matches of over the same elements") {
    std::vector<std::string> words{"bat", "cat", "bird", "mad", "catch", "ditch"};
    CHECK(collect(from_collection(words)) == collect(of(words)));
    CHECK(from_collection(words).count() == 6);

    auto starts_with_ca = [](const std::string& w) { return w.rfind("ca", 0) == 0; };
    CHECK(from_collection(words).filter(starts_with_ca).count() ==
          of(words).filter(starts_with_ca).count());
}

TEST_CASE("from_collection on an empty collection") {
    std::vector<double> empty;
    CHECK(from_collection(empty).count() == 0);
}

TEST_CASE("from_collection counts 100..200") {
    std::vector<int> values(101);
    std::iota(values.begin(), values.end(), 100);
    CHECK(from_collection(values).count() == oracles::loop_count(values));
    CHECK(from_collection(values).count() == 101);
}

TEST_CASE("from_collection works on non-random-access containers") {
    std::list<int> values{5, 6, 7};
    CHECK(from_collection(values).sum() == 18);
    CHECK(from_collection(values).parallel().workers(2).sum() == 18);
}

TEST_CASE("lines splits a newline-terminated file") {
    TempFile file("a\nb\nc\n");
    CHECK(collect(lines(file.path())) == std::vector<std::string>{"a", "b", "c"});
    CHECK(lines(file.path()).count() == 3);
}

TEST_CASE("lines agrees with the splitter oracle on terminator layouts") {
    for (const std::string& contents : {std::string("a\nb\nc"), std::string("a\nb\nc\n"),
                                       std::string("one\r\ntwo\r\n"), std::string("a\n\nb"),
                                       std::string(""), std::string("\n")}) {
        TempFile file(contents);
        auto expected = oracles::split_lines(contents);
        CHECK(collect(lines(file.path())) == expected);
    }
}

TEST_CASE("lines on a missing file fails at creation") {
    CHECK_THROWS_AS(lines("/nonexistent/streamlet/no_such_file.txt"), FileError);
}

TEST_CASE("invalid UTF-8 fails at consumption, not creation") {
    TempFile file("ok\n\xFF\xFE broken\n");
    auto p = lines(file.path());  // creation succeeds
    CHECK_THROWS_AS(p.count(), EncodingError);
}

TEST_CASE("multibyte UTF-8 lines are accepted") {
    TempFile file("caf\xC3\xA9\n\xE2\x82\xAC 5\n");
    CHECK(lines(file.path()).count() == 2);
}

TEST_CASE("range is half-open") {
    CHECK(collect(range(5, 10)) == std::vector<std::int64_t>{5, 6, 7, 8, 9});
    CHECK(range(7, 7).count() == 0);
    CHECK(range(9, 3).count() == 0);
    CHECK(range(100, 201).count() == 101);
}

TEST_CASE("range_closed includes both endpoints") {
    CHECK(collect(range_closed(5, 10)) == std::vector<std::int64_t>{5, 6, 7, 8, 9, 10});
    CHECK(range_closed(100, 200).count() == 101);
    CHECK(range_closed(3, 2).count() == 0);
    CHECK(range_closed(4, 4).count() == 1);
}

TEST_CASE("range counts match the closed form for random endpoints") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::int64_t> endpoint(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        std::int64_t a = endpoint(rng);
        std::int64_t b = endpoint(rng);
        CHECK(range(a, b).count() == std::max<std::int64_t>(0, b - a));
        CHECK(range_closed(a, b).count() == std::max<std::int64_t>(0, b - a + 1));
    }
}
