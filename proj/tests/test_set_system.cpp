#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hitlab/set_system.hpp"
#include "oracles.hpp"

using hitlab::SetSystem;
using hitlab::VertexSet;
using oracle::vertex_set;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const char* name) {
  return fs::temp_directory_path() / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("build dedups and canonicalizes") {
  const SetSystem sys = SetSystem::build(3, {{1, 2}, {2, 1}, {3}});
  REQUIRE(sys.edge_count() == 2);
  CHECK(sys.edges()[0] == vertex_set(3, {1, 2}));
  CHECK(sys.edges()[1] == vertex_set(3, {3}));
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(SetSystem::build(3, {{}}), hitlab::EmptyEdgeError);
  CHECK_THROWS_AS(SetSystem::build(4, {{1, 5}}), hitlab::ElementOutOfRangeError);
  CHECK_THROWS_AS(SetSystem::build(4, {{0}}), hitlab::ElementOutOfRangeError);
  CHECK_THROWS_AS(SetSystem::build(0, {}), hitlab::DomainError);
  CHECK_THROWS_AS(SetSystem::build(1025, {}), hitlab::DomainError);
}

TEST_CASE("hitting and independence predicates") {
  const SetSystem one = SetSystem::build(2, {{1, 2}});
  CHECK(hitlab::is_hitting(one, vertex_set(2, {1})));
  CHECK(hitlab::is_independent(one, vertex_set(2, {1})));
  CHECK_FALSE(hitlab::is_independent(one, vertex_set(2, {1, 2})));

  const SetSystem two = SetSystem::build(2, {{1}, {2}});
  CHECK_FALSE(hitlab::is_hitting(two, vertex_set(2, {1})));
  CHECK(hitlab::is_hitting(two, vertex_set(2, {1, 2})));

  const SetSystem none = SetSystem::build(3, {});
  CHECK(hitlab::is_hitting(none, vertex_set(3, {})));

  const SetSystem three = SetSystem::build(3, {{3}});
  CHECK(hitlab::is_independent(three, vertex_set(3, {1, 2})));
}

TEST_CASE("minimality and maximality") {
  const SetSystem one = SetSystem::build(2, {{1, 2}});
  CHECK_FALSE(hitlab::is_minimal_hitting(one, vertex_set(2, {1, 2})));
  CHECK(hitlab::is_minimal_hitting(one, vertex_set(2, {1})));

  const SetSystem two = SetSystem::build(2, {{1}, {2}});
  CHECK(hitlab::is_minimal_hitting(two, vertex_set(2, {1, 2})));
}

TEST_CASE("hitting a system is independence of the complement") {
  std::mt19937_64 gen(21);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + static_cast<int>(gen() % 7);
    const SetSystem sys = oracle::random_system(n, 0.2, gen());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet h(n);
      h.words()[0] = mask;
      CHECK(hitlab::is_hitting(sys, h) ==
            hitlab::is_independent(sys, h.complement()));
    }
  }
}

TEST_CASE("minimal hitting iff complement is maximal independent") {
  std::mt19937_64 gen(22);
  for (int it = 0; it < 25; ++it) {
    const int n = 2 + static_cast<int>(gen() % 9);  // exhaustive up to n = 10
    const SetSystem sys = oracle::random_system(n, 0.15, gen());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet h(n);
      h.words()[0] = mask;
      CHECK(hitlab::is_minimal_hitting(sys, h) ==
            hitlab::is_maximal_independent(sys, h.complement()));
    }
  }
}

TEST_CASE("reduce removes supersets only") {
  const SetSystem sys = SetSystem::build(3, {{1}, {1, 2}});
  const SetSystem red = hitlab::reduce(sys);
  REQUIRE(red.edge_count() == 1);
  CHECK(red.edges()[0] == vertex_set(3, {1}));

  const SetSystem antichain = SetSystem::build(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(hitlab::reduce(antichain) == antichain);
}

TEST_CASE("reduce preserves the minimum hitting set size") {
  std::mt19937_64 gen(23);
  for (int it = 0; it < 25; ++it) {
    const int n = 4 + static_cast<int>(gen() % 9);  // up to 12
    const SetSystem sys = oracle::random_system(n, 0.1, gen());
    const SetSystem red = hitlab::reduce(sys);
    CHECK(oracle::brute_min_hitting(red) == oracle::brute_min_hitting(sys));
  }
}

TEST_CASE("text format round trip") {
  const auto path = temp_file("hitlab_roundtrip.txt");

  const SetSystem sys = SetSystem::build(3, {{1, 2}, {3}});
  hitlab::write_text(sys, path);
  CHECK(slurp(path) == "n 3\n1 2\n3\n");
  CHECK(hitlab::read_text(path) == sys);

  std::mt19937_64 gen(24);
  for (int it = 0; it < 20; ++it) {
    const int n = 1 + static_cast<int>(gen() % 40);
    const SetSystem rnd = oracle::random_system(std::min(n, 12), 0.2, gen());
    hitlab::write_text(rnd, path);
    CHECK(hitlab::read_text(path) == rnd);
    // writing what was read back is byte-identical
    const std::string first = slurp(path);
    hitlab::write_text(hitlab::read_text(path), path);
    CHECK(slurp(path) == first);
  }
  fs::remove(path);
}

TEST_CASE("parser reports malformed files with line numbers") {
  const auto path = temp_file("hitlab_parse.txt");

  spit(path, "n 3\n\n");
  CHECK_THROWS_AS(hitlab::read_text(path), hitlab::ParseError);
  try {
    hitlab::read_text(path);
  } catch (const hitlab::ParseError& e) {
    CHECK(e.line() == 2);
  }

  spit(path, "n 3\n1 x\n");
  CHECK_THROWS_AS(hitlab::read_text(path), hitlab::ParseError);

  spit(path, "3\n1 2\n");
  CHECK_THROWS_AS(hitlab::read_text(path), hitlab::ParseError);

  spit(path, "n 3\n1 4\n");
  CHECK_THROWS_AS(hitlab::read_text(path), hitlab::ParseError);

  spit(path, "");
  CHECK_THROWS_AS(hitlab::read_text(path), hitlab::ParseError);

  spit(path, "# banner\nn 2\n# mid comment\n1 2\n");
  const SetSystem sys = hitlab::read_text(path);
  CHECK(sys.n() == 2);
  CHECK(sys.edge_count() == 1);

  fs::remove(path);
}
