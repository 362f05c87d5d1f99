#pragma once

#include <json.hpp>

#include "gkz/bundled.hpp"
#include "gkz/continuation.hpp"

namespace gkz {

using Json = nlohmann::json;

// A fully parsed input file: the point configuration, named triangulation
// heights and flip pairs, evaluation points with exact branch data, and the
// numeric policy.  Everything a run needs; defaults are filled on load.
struct ConfigFile {
  std::string name;
  PointConfiguration config;
  IVec beta;  // zero unless given
  std::vector<std::pair<std::string, QVec>> heights;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> flips;
  std::vector<ZPoint> zpoints;
  ContourPolicy policy;
};

// Accepts JSON, or TOML when the filename ends in .toml.  Unknown keys are an
// error, as are missing required ones.
ConfigFile load_config(const std::string& path);
ConfigFile parse_config(const Json& j);

// The TOML subset used by config files (top-level scalars and arrays, [table]
// sections, [[array-of-table]] sections), converted to the same JSON shape.
Json parse_toml(const std::string& text);

// The fully resolved configuration (defaults included), echoed verbatim into
// every result so runs are self-describing.
Json resolved_config(const ConfigFile& c);

Json cmd_info(const ConfigFile& c);
Json cmd_solve(const ConfigFile& c, const std::string& triangulation, size_t z_index);
Json cmd_verify(const ConfigFile& c, const std::string& flip);

// serialization helpers (rationals as "p/q" strings, complex as [re, im])
Json rat_json(const Rat& r);
Json qvec_json(const QVec& v);
Json ivec_json(const IVec& v);
Json cplx_json(cplx z);
Json cvec_json(const CVec& v);
Rat rat_of_json(const Json& j);

ConfigFile bundled_config_file(const BundledConfig& b);

}  // namespace gkz
