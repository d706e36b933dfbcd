#ifndef CSISO_GROUP_IO_HPP
#define CSISO_GROUP_IO_HPP

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "csiso/cayley_group.hpp"
#include "csiso/perm_group.hpp"
#include "csiso/series.hpp"

namespace csiso::io
{

using Json = nlohmann::ordered_json;

// {"name": s, "order": n, "table": [[...], ...]}. Latin square and identity
// are checked here; associativity only when `verify` is set.
CayleyGroup group_from_json(Json const &j, bool verify = false);
Json group_to_json(CayleyGroup const &g);
CayleyGroup load_group(std::filesystem::path const &path, bool verify = false);

// {"group": path-or-inline, "series": [G_1, ..., [0]]}. A relative group
// path is resolved against `base_dir`. When `group` is given it is used, and
// a group named in the file must have the same table.
SeriesSpec series_from_json(Json const &j,
                            std::optional<CayleyGroup> const &group,
                            std::filesystem::path const &base_dir = {},
                            bool verify = false);
SeriesSpec load_series(std::filesystem::path const &path,
                       std::optional<CayleyGroup> const &group,
                       bool verify = false);
// G_1 .. G_m as element lists.
Json series_to_json(SeriesSpec const &spec);

Json perm_to_json(Perm const &p);
// Integers up to 2^53 as numbers, larger ones as decimal strings.
Json big_to_json(BigInt const &x);
// {"generators": strong generators in chain order, "order": "...",
//  "witness_index": ...}
Json perm_group_to_json(PermGroup const &g);

Json read_json(std::filesystem::path const &path);

} // namespace csiso::io

#endif // CSISO_GROUP_IO_HPP
