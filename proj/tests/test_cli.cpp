#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "csiso/cli.hpp"
#include "csiso/group_io.hpp"
#include "csiso/oracle.hpp"

using namespace csiso;
using io::Json;

namespace
{

std::string const dir = CSISO_FIXTURE_DIR;

std::string group(std::string const &name) { return dir + "/groups/" + name + ".json"; }
std::string series(std::string const &name) { return dir + "/series/" + name + ".json"; }

struct Run
{
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "csiso");
  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string stem(std::string name)
{
  for (auto &c : name)
    if (c == ':')
      c = '_';
  return name;
}

PermGroup group_of(Json const &j)
{
  std::vector<Perm> gens;
  std::size_t n = 0;
  for (auto const &g : j["generators"]) {
    std::vector<Point> img = g.get<std::vector<Point>>();
    n = img.size();
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

} // namespace

TEST_CASE("auto examples")
{
  auto r = run({"auto", group("S3"), series("S3")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == "6");
  CHECK(r.json()["witness_index"].is_number());

  r = run({"auto", group("C4"), series("C4")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == "2");

  r = run({"auto", group("C4"), series("C4"), "--method", "top-down", "--engine", "l2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["order"] == "2");

  r = run({"auto", group("bad_latin"), series("C4")});
  CHECK(r.code == 2);
  CHECK(r.err.find("latin square") != std::string::npos);
}

TEST_CASE("validation and contract exit codes")
{
  CHECK(run({"verify", group("nonassoc")}).code == 2);
  CHECK(run({"verify", group("S3")}).code == 0);
  // series file names a different group
  CHECK(run({"auto", group("C4"), series("S3")}).code == 2);
  CHECK(run({"auto", group("S3"), dir + "/missing.json"}).code == 2);
  CHECK(run({"auto", group("S3")}).code == 1);
  CHECK(run({"auto", group("S3"), series("S3"), "--method", "sideways"}).code == 1);
  auto r = run({"iso", group("S4"), series("S4"), group("S4"), series("S4")});
  CHECK(r.code == 3);
  CHECK(r.err.find("CSISO_MAX_ORDER") != std::string::npos);
}

TEST_CASE("iso examples")
{
  auto r = run({"iso", group("S3"), series("S3"), group("S3"), series("S3")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["isomorphic"] == true);

  r = run({"iso", group("C4"), series("C4"), group("C2xC2"), series("C2xC2")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["isomorphic"] == false);

  r = run({"iso", group("S3"), series("S3"), group("S3_relabel"), series("S3_relabel")});
  REQUIRE(r.code == 0);
  REQUIRE(r.json()["isomorphic"] == true);
  auto g1 = io::load_group(group("S3"));
  auto g2 = io::load_group(group("S3_relabel"));
  GroupHom h{r.json()["iso"].get<std::vector<Element>>()};
  CHECK(is_homomorphism(g1, g2, h));
  CHECK(r.json()["aut_order"] == "6");

  r = run({"fulliso", group("D4"), group("Q8")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["isomorphic"] == false);
}

TEST_CASE("series examples")
{
  CHECK(run({"series", group("C2xC2"), "--all"}).json().size() == 3);
  CHECK(run({"series", group("C8"), "--all"}).json().size() == 1);
  auto r = run({"series", group("S4"), "--characteristic"});
  REQUIRE(r.code == 0);
  CHECK(r.json().size() == 1);
  CHECK(run({"series", group("S4"), "--all", "--characteristic"}).code == 1);
}

TEST_CASE("output is deterministic")
{
  for (auto const &args : std::vector<std::vector<std::string>>{
         {"auto", group("D4"), series("D4")},
         {"auto", group("A4"), series("A4"), "--method", "top-down"},
         {"iso", group("S3"), series("S3"), group("S3_relabel"), series("S3_relabel")},
         {"series", group("C2xC2xC2"), "--all"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("oracle and solver agree on every catalog fixture")
{
  for (auto const &e : oracle::catalog()) {
    auto name = stem(e.name);
    CAPTURE(name);
    auto want = run({"oracle", "auto", group(name), series(name)});
    REQUIRE(want.code == 0);
    for (auto method : {"bottom-up", "top-down"}) {
      auto got = run({"auto", group(name), series(name), "--method", method});
      REQUIRE(got.code == 0);
      CHECK(got.json()["order"] == want.json()["order"]);
      auto pg = group_of(got.json());
      for (auto const &x : want.json()["generators"])
        CHECK(pg.contains(Perm(x.get<std::vector<Point>>())));
    }
    auto sa = run({"series", group(name), "--all"});
    auto sb = run({"oracle", "series", group(name), "--all"});
    CHECK(sa.json().size() == sb.json().size());
  }
  auto a = run({"oracle", "iso", group("S3"), series("S3"), group("S3_relabel"),
                series("S3_relabel")});
  auto b = run({"iso", group("S3"), series("S3"), group("S3_relabel"),
                series("S3_relabel")});
  CHECK(a.json()["isomorphic"] == b.json()["isomorphic"]);
  CHECK(a.json()["aut_order"] == b.json()["aut_order"]);
  CHECK(run({"oracle", "fulliso", group("D4"), group("Q8")}).json()["isomorphic"] ==
        false);
}
