#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "phigroup/constructions.hpp"
#include "phigroup/group_io.hpp"

using namespace phigroup;

TEST_SUITE("group_io") {

TEST_CASE("spec grammar") {
  CHECK(parse_group_spec("cyclic:16").order() == 16);
  CHECK(parse_group_spec("abelian:4x4").name() == "C4xC4");
  CHECK(parse_group_spec("dihedral:5").order() == 10);
  CHECK(parse_group_spec("dicyclic:2").order() == 8);
  CHECK(parse_group_spec("sym:4").order() == 24);
  CHECK(parse_group_spec("alt:4").name() == "A4");
  CHECK(parse_group_spec("sdp:7:3:2").order() == 21);
  CHECK(parse_group_spec("prod:cyclic:2,dicyclic:2").order() == 16);
  CHECK(parse_group_spec("prod:(prod:cyclic:2,cyclic:2),cyclic:3").order() == 12);
  CHECK(parse_group_spec("prod:cyclic:2,cyclic:3,cyclic:5").order() == 30);
}

TEST_CASE("malformed specs") {
  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:x", "cyclic:0", "torus:3", "abelian:4x", "sdp:7:3",
                          "sdp:7:3:3", "prod:cyclic:2", "prod:(cyclic:2,cyclic:3", "sym:9", "file:/nonexistent.json"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), GroupSpecError);
  }
  CHECK_THROWS_AS(parse_group_spec("cyclic:5000"), OrderCapExceeded);
}

TEST_CASE("json round trip") {
  for (const char* spec : {"cyclic:1", "sym:3", "dicyclic:3", "sdp:5:4:2"}) {
    auto g = parse_group_spec(spec);
    auto back = group_from_json(group_to_json(g));
    CHECK(back.name() == g.name());
    CHECK(back.order() == g.order());
    CHECK(back.identity() == g.identity());
    CHECK(back.table_rows() == g.table_rows());
    CHECK(back.labels() == g.labels());
    CHECK(group_to_json(back) == group_to_json(g));
  }
}

TEST_CASE("json errors") {
  CHECK_THROWS_AS(group_from_json("{"), GroupSpecError);
  CHECK_THROWS_AS(group_from_json(R"({"name":"x","order":2,"identity":0})"), GroupSpecError);
  CHECK_THROWS_AS(group_from_json(R"({"name":"x","order":3,"identity":0,"table":[[0,1],[1,0]]})"), GroupSpecError);
  CHECK_THROWS_AS(group_from_json(R"({"name":"x","order":2,"identity":0,"table":[[0,1],[1,1]]})"), GroupAxiomError);
}

TEST_CASE("file specs") {
  const auto path = std::filesystem::temp_directory_path() / "phigroup_io_test.json";
  {
    std::ofstream f(path);
    f << R"({"name": "K4", "order": 4, "identity": 0, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})";
  }
  auto g = parse_group_spec("file:" + path.string());
  CHECK(g.name() == "K4");
  CHECK(g.order() == 4);
  auto p = parse_group_spec("prod:file:" + path.string() + ",cyclic:3");
  CHECK(p.order() == 12);
  std::filesystem::remove(path);
}

}
