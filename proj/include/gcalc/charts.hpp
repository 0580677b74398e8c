#pragma once

// Builtin charts and the JSON chart manifest.

#include <string>
#include <vector>

#include "gcalc/manifold.hpp"

namespace gcalc {

std::vector<std::string> builtin_chart_names();
Chart builtin_chart(const std::string& name);

// Manifest schema:
//   { "name": str, "coordinates": [str...], "metric": [[expr...]...],
//     "frames": { name: [[expr...]...] | "identity" },
//     "contorsion": [ {"i":1,"j":2,"k":1,"expr":str} ... ],   (1-based)
//     "fields": { name: {"frame": str, "components": {"1,2": expr}} },
//     "orientation": 1 | -1,
//     "domain": [[lo,hi]...] | {coord: [lo,hi]} }
Chart load_manifest_text(const std::string& text);
Chart load_manifest_file(const std::string& path);

}  // namespace gcalc
