#include "doctest.h"

#include "csiso/error.hpp"
#include "csiso/group_io.hpp"
#include "csiso/oracle.hpp"

using namespace csiso;
using io::Json;

TEST_CASE("group round trip")
{
  for (auto const &e : oracle::catalog()) {
    auto j = io::group_to_json(e.group);
    auto g = io::group_from_json(j, true);
    CHECK(g.table() == e.group.table());
    CHECK(g.name() == e.name);
  }
}

TEST_CASE("group parse errors")
{
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"order":2})")), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"order":3,"table":[[0,1],[1,0]]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"table":[[0,1],[1,2]]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"table":[[0,1],[1,-1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"table":[[1,0],[0,1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::load_group(CSISO_FIXTURE_DIR "/groups/nonassoc.json", true),
                  ValidationError);
  CHECK_NOTHROW(io::load_group(CSISO_FIXTURE_DIR "/groups/nonassoc.json", false));
}

TEST_CASE("series parsing")
{
  auto const &c4 = oracle::catalog_group("C4");
  auto inl = io::group_to_json(c4);
  Json j{{"group", inl}, {"series", {{0, 2}, {0}}}};
  auto spec = io::series_from_json(j, std::nullopt);
  REQUIRE(spec.terms.size() == 3);
  CHECK(spec.terms[1].order() == 2);
  CHECK(io::series_to_json(spec) == j["series"]);

  auto bad = [&](Json s) {
    CHECK_THROWS_AS(io::series_from_json(Json{{"series", s}}, c4), ValidationError);
  };
  bad({{0, 2}});          // last term not [0]
  bad({{0, 1}, {0}});     // not a subgroup
  bad({{0, 2, 2}, {0}});  // repeated element
  bad({{0, 7}, {0}});     // out of range
  CHECK_THROWS_AS(io::series_from_json(Json{{"series", {{0}}}}, std::nullopt),
                  ValidationError);

  auto const &s3 = oracle::catalog_group("S3");
  // S3 > <transposition> > 1: not normal
  Element t = 0;
  for (Element x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2)
      t = x;
  CHECK_THROWS_AS(io::series_from_json(Json{{"series", {{0, t}, {0}}}}, s3),
                  ValidationError);

  auto from_file = io::load_series(CSISO_FIXTURE_DIR "/series/S3.json", std::nullopt);
  CHECK(from_file.group.order() == 6);
}

TEST_CASE("perm group output")
{
  auto j = io::perm_group_to_json(PermGroup(3, {Perm({1, 2, 0})}).with_self_witness());
  CHECK(j["order"] == "3");
  CHECK(j["witness_index"] == 1);
  CHECK(io::big_to_json(BigInt(1) << 60) == "1152921504606846976");
  CHECK(io::big_to_json(BigInt(12)) == 12);
}
