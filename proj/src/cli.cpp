#include "csiso/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "csiso/error.hpp"
#include "csiso/group_io.hpp"
#include "csiso/oracle.hpp"
#include "csiso/series.hpp"
#include "csiso/small_aut.hpp"

namespace csiso
{

namespace
{

using io::Json;

struct Options
{
  std::string group, series, group2, series2, name;
  std::string method = "bottom-up";
  std::string engine = "auto";
  bool verify = false;
  bool all = false;
  bool characteristic = false;
};

oracle::Series as_oracle_series(SeriesSpec const &spec)
{
  oracle::Series s;
  for (auto const &t : spec.terms)
    s.push_back(t.elements());
  return s;
}

Engine parse_engine(std::string const &e)
{
  if (e == "l1")
    return Engine::L1;
  if (e == "l2")
    return Engine::L2;
  return Engine::Auto;
}

SeriesSpec load_pair(std::string const &gpath, std::string const &spath,
                     bool verify)
{
  return io::load_series(spath, io::load_group(gpath, verify), verify);
}

Json iso_json(IsoResult const &r)
{
  Json j;
  j["isomorphic"] = r.isomorphic;
  if (r.isomorphic) {
    j["iso"] = r.iso.image;
    if (r.autgroup)
      j["aut_order"] = r.autgroup->order().str();
  }
  return j;
}

Json cmd_auto(Options const &o)
{
  auto spec = load_pair(o.group, o.series, o.verify);
  auto e = parse_engine(o.engine);
  auto res = o.method == "top-down" ? top_down_auto(spec, e) : bottom_up_auto(spec, e);
  return io::perm_group_to_json(res);
}

Json cmd_iso(Options const &o)
{
  auto s1 = load_pair(o.group, o.series, o.verify);
  auto s2 = load_pair(o.group2, o.series2, o.verify);
  return iso_json(comp_series_iso(s1, s2));
}

Json cmd_fulliso(Options const &o)
{
  auto g1 = io::load_group(o.group, o.verify);
  auto g2 = io::load_group(o.group2, o.verify);
  return iso_json(full_iso(g1, g2));
}

Json cmd_series(Options const &o)
{
  auto g = io::load_group(o.group, o.verify);
  Json j = Json::array();
  if (o.characteristic) {
    auto cs = characteristic_series(g);
    j.push_back(io::series_to_json(SeriesSpec{g, cs.terms}));
    return j;
  }
  for (auto const &s : enumerate_composition_series(g))
    j.push_back(io::series_to_json(s));
  return j;
}

Json cmd_verify(Options const &o)
{
  auto g = io::load_group(o.group, true);
  Json j;
  j["group"] = "ok";
  j["order"] = g.order();
  if (!o.series.empty()) {
    auto spec = io::load_series(o.series, g, true);
    auto r = validate_series(spec);
    j["series"] = "ok";
    j["composition"] = r.composition;
  }
  return j;
}

Json oracle_auto(Options const &o)
{
  auto spec = load_pair(o.group, o.series, o.verify);
  auto all = oracle::aut_fixing_series(spec.group, as_oracle_series(spec));
  Json j;
  Json gens = Json::array();
  for (auto const &x : all)
    gens.push_back(io::perm_to_json(x));
  j["generators"] = std::move(gens);
  j["order"] = std::to_string(all.size());
  j["witness_index"] = nullptr;
  return j;
}

Json oracle_iso(Options const &o)
{
  auto s1 = load_pair(o.group, o.series, o.verify);
  auto s2 = load_pair(o.group2, o.series2, o.verify);
  require_composition_series(s1);
  require_composition_series(s2);
  auto isos = oracle::iso_matching_series(s1.group, as_oracle_series(s1),
                                          s2.group, as_oracle_series(s2));
  Json j;
  j["isomorphic"] = !isos.empty();
  if (!isos.empty()) {
    j["iso"] = isos.front().image;
    j["aut_order"] =
      std::to_string(oracle::aut_fixing_series(s1.group, as_oracle_series(s1)).size());
  }
  return j;
}

Json oracle_fulliso(Options const &o)
{
  auto g1 = io::load_group(o.group, o.verify);
  auto g2 = io::load_group(o.group2, o.verify);
  auto isos = oracle::all_isomorphisms(g1, g2);
  Json j;
  j["isomorphic"] = !isos.empty();
  if (!isos.empty())
    j["iso"] = isos.front().image;
  return j;
}

Json oracle_series(Options const &o)
{
  auto g = io::load_group(o.group, o.verify);
  if (o.characteristic)
    throw ValidationError("oracle series supports --all only");
  Json j = Json::array();
  for (auto const &s : oracle::composition_series(g)) {
    Json t = Json::array();
    for (std::size_t i = 1; i < s.size(); ++i)
      t.push_back(s[i]);
    j.push_back(std::move(t));
  }
  return j;
}

Json cmd_catalog(Options const &o)
{
  if (!o.name.empty())
    return io::group_to_json(oracle::catalog_group(o.name));
  Json j = Json::array();
  for (auto const &e : oracle::catalog())
    j.push_back(e.name);
  return j;
}

} // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out,
            std::ostream &err)
{
  CLI::App app{"Series-preserving automorphisms and isomorphisms of finite "
               "groups given by Cayley tables"};
  app.require_subcommand(1);
  Options o;
  std::function<Json()> run;

  auto add_verify = [&](CLI::App *c) {
    c->add_flag("--verify", o.verify, "also check associativity");
  };
  auto setup_auto = [&](CLI::App *c) {
    c->add_option("group", o.group, "group file")->required();
    c->add_option("series", o.series, "series file")->required();
    add_verify(c);
  };
  auto setup_iso = [&](CLI::App *c) {
    c->add_option("group1", o.group, "first group file")->required();
    c->add_option("series1", o.series, "first series file")->required();
    c->add_option("group2", o.group2, "second group file")->required();
    c->add_option("series2", o.series2, "second series file")->required();
    add_verify(c);
  };
  auto setup_fulliso = [&](CLI::App *c) {
    c->add_option("group1", o.group, "first group file")->required();
    c->add_option("group2", o.group2, "second group file")->required();
    add_verify(c);
  };
  auto setup_series = [&](CLI::App *c) {
    c->add_option("group", o.group, "group file")->required();
    auto *all = c->add_flag("--all", o.all, "every composition series");
    auto *ch = c->add_flag("--characteristic", o.characteristic,
                           "the characteristic series");
    all->excludes(ch);
    add_verify(c);
  };

  auto *a = app.add_subcommand("auto", "series-preserving automorphism group");
  setup_auto(a);
  a->add_option("--method", o.method)
    ->check(CLI::IsMember({"bottom-up", "top-down"}));
  a->add_option("--engine", o.engine)->check(CLI::IsMember({"l1", "l2", "auto"}));
  a->callback([&] { run = [&] { return cmd_auto(o); }; });

  auto *i = app.add_subcommand("iso", "isomorphism matching two series");
  setup_iso(i);
  i->callback([&] { run = [&] { return cmd_iso(o); }; });

  auto *f = app.add_subcommand("fulliso", "isomorphism test over all series");
  setup_fulliso(f);
  f->callback([&] { run = [&] { return cmd_fulliso(o); }; });

  auto *s = app.add_subcommand("series", "composition or characteristic series");
  setup_series(s);
  s->callback([&] { run = [&] { return cmd_series(o); }; });

  auto *v = app.add_subcommand("verify", "check a group file and optional series");
  v->add_option("group", o.group, "group file")->required();
  v->add_option("series", o.series, "series file");
  v->callback([&] { run = [&] { return cmd_verify(o); }; });

  auto *orc = app.add_subcommand("oracle", "brute-force counterparts");
  orc->require_subcommand(1);
  auto *oa = orc->add_subcommand("auto");
  setup_auto(oa);
  oa->callback([&] { run = [&] { return oracle_auto(o); }; });
  auto *oi = orc->add_subcommand("iso");
  setup_iso(oi);
  oi->callback([&] { run = [&] { return oracle_iso(o); }; });
  auto *of = orc->add_subcommand("fulliso");
  setup_fulliso(of);
  of->callback([&] { run = [&] { return oracle_fulliso(o); }; });
  auto *os = orc->add_subcommand("series");
  setup_series(os);
  os->callback([&] { run = [&] { return oracle_series(o); }; });

  auto *c = app.add_subcommand("catalog", "list built-in groups or print one");
  c->add_option("name", o.name, "group name");
  c->callback([&] { run = [&] { return cmd_catalog(o); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (s->parsed() && !o.all && !o.characteristic)
    o.all = true;
  try {
    out << run().dump() << '\n';
    return 0;
  } catch (ValidationError const &e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (ContractError const &e) {
    err << "contract error: " << e.what() << '\n';
    return 3;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace csiso
