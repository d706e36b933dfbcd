#include "csiso/group_io.hpp"

#include <fstream>
#include <sstream>

#include "csiso/error.hpp"

namespace csiso::io
{

namespace
{

Element element_at(Json const &v, std::size_t n, char const *what)
{
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
      static_cast<std::size_t>(v.get<std::int64_t>()) >= n)
    throw ValidationError(std::string(what) + ": entry " + v.dump() +
                          " is not an element index below " + std::to_string(n));
  return static_cast<Element>(v.get<std::int64_t>());
}

} // namespace

Json read_json(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (nlohmann::json::exception const &e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

CayleyGroup group_from_json(Json const &j, bool verify)
{
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    throw ValidationError("group: expected an object with a \"table\" array");
  auto const &t = j["table"];
  std::size_t const n = t.size();
  if (j.contains("order") &&
      (!j["order"].is_number_integer() || j["order"].get<std::int64_t>() !=
                                            static_cast<std::int64_t>(n)))
    throw ValidationError("group: \"order\" does not match the table size " +
                          std::to_string(n));
  std::vector<std::vector<Element>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!t[i].is_array())
      throw ValidationError("table: row " + std::to_string(i) + " is not an array");
    for (auto const &v : t[i])
      table[i].push_back(element_at(v, n, "table"));
  }
  std::string name;
  if (j.contains("name") && j["name"].is_string())
    name = j["name"].get<std::string>();
  CayleyGroup g(table, name);
  if (verify)
    g.validate_associativity();
  return g;
}

Json group_to_json(CayleyGroup const &g)
{
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  return j;
}

CayleyGroup load_group(std::filesystem::path const &path, bool verify)
{
  return group_from_json(read_json(path), verify);
}

SeriesSpec series_from_json(Json const &j, std::optional<CayleyGroup> const &group,
                            std::filesystem::path const &base_dir, bool verify)
{
  if (!j.is_object() || !j.contains("series") || !j["series"].is_array())
    throw ValidationError("series: expected an object with a \"series\" array");
  std::optional<CayleyGroup> named;
  if (j.contains("group")) {
    auto const &gj = j["group"];
    if (gj.is_string()) {
      std::filesystem::path p = gj.get<std::string>();
      named = load_group(p.is_relative() ? base_dir / p : p, verify);
    } else {
      named = group_from_json(gj, verify);
    }
  }
  if (!group && !named)
    throw ValidationError("series: no group given");
  if (group && named && group->table() != named->table())
    throw ValidationError("series: group in the series file differs from the "
                          "given group");
  CayleyGroup const &g = group ? *group : *named;

  SeriesSpec spec{g, {whole_group(g)}};
  for (auto const &term : j["series"]) {
    if (!term.is_array())
      throw ValidationError("series: every term must be an array");
    std::vector<Element> e;
    for (auto const &v : term)
      e.push_back(element_at(v, g.order(), "series"));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ValidationError("series: repeated element in a term");
    spec.terms.emplace_back(g.order(), std::move(e));
  }
  if (spec.terms.back().elements() != std::vector<Element>{0})
    throw ValidationError("series: last term must be [0]");
  auto r = validate_series(spec);
  if (!r.ok)
    throw ValidationError("series: " + r.message);
  return spec;
}

SeriesSpec load_series(std::filesystem::path const &path,
                       std::optional<CayleyGroup> const &group, bool verify)
{
  return series_from_json(read_json(path), group, path.parent_path(), verify);
}

Json series_to_json(SeriesSpec const &spec)
{
  Json j = Json::array();
  for (std::size_t i = 1; i < spec.terms.size(); ++i)
    j.push_back(spec.terms[i].elements());
  return j;
}

Json perm_to_json(Perm const &p)
{
  Json j = Json::array();
  for (std::size_t i = 0; i < p.degree(); ++i)
    j.push_back(p[static_cast<Point>(i)]);
  return j;
}

Json big_to_json(BigInt const &x)
{
  if (x <= (BigInt(1) << 53))
    return x.convert_to<std::uint64_t>();
  return x.str();
}

Json perm_group_to_json(PermGroup const &g)
{
  Json j;
  Json gens = Json::array();
  for (auto const &x : g.strong_generators())
    gens.push_back(perm_to_json(x));
  j["generators"] = std::move(gens);
  j["order"] = g.order().str();
  if (g.has_witness())
    j["witness_index"] = big_to_json(g.witness()->index_bound);
  else
    j["witness_index"] = nullptr;
  return j;
}

} // namespace csiso::io
