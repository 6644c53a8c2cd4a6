#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsk/burnside.hpp"
#include "gsk/gcw.hpp"
#include "gsk/span.hpp"
#include "gsk/squares_k0.hpp"

namespace gsk::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

/// Reads and parses a file; failures become ParseError.
json load_json(const fs::path& path);

/// {"table": [[...]]}, {"degree": n, "generators": [[...]]}, {"named": "D4"},
/// or a string naming a group file relative to `dir`.
GroupPtr parse_group(const json& j, const fs::path& dir = {});
/// {"size": n, "action": [[g.x for x] for g]} or {"orbits": ["G/C2", 0, ...]},
/// where an orbit is a subgroup class name or class index.
GSet parse_gset(const json& j, const GroupPtr& G);
GMap parse_gmap(const json& j, const GSet& source, const GSet& target);

/// {"group", "cells": [gset...], "name"?}
GCWComplex parse_complex(const json& j, const fs::path& dir = {});
/// The complex plus {"base": gset, "labels": [[...] per dimension]}; without
/// them every cell is labeled by the one-point base.
LabeledGCW parse_labeled_complex(const json& j, const fs::path& dir = {});
/// {"group", "source", "apex", "target", "left": [...], "right": [...]}
Span parse_span(const json& j, const fs::path& dir = {});
/// {"objects", "basepoint", "squares": [[A,B,C,D]...], "coproducts": {"A,B": "X"}}
SquaresPresentation parse_presentation(const json& j);
/// {"name": [ints...]}
std::map<std::string, std::vector<std::int64_t>> parse_assignment(const json& j);

json to_json(const FiniteGroup& G);
json to_json(const GSet& X);
json to_json(const BurnsideElement& a);
json to_json(const Span& s);
json to_json(const SquaresPresentation& P);
json to_json(const FPAbelianGroup& A);
json to_json(const BigInt& x);

}  // namespace gsk::io
