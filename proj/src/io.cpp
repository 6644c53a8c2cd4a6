#include "gsk/io.hpp"

#include <fstream>
#include <sstream>

#include "gsk/catalogue.hpp"

namespace gsk::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int class_by_label(const GroupPtr& G, const json& entry) {
  const auto& lat = G->lattice();
  if (entry.is_number_integer()) {
    int i = entry.get<int>();
    if (i < 0 || static_cast<std::size_t>(i) >= lat.class_count())
      throw ParseError("orbit class index " + std::to_string(i) + " out of range");
    return i;
  }
  std::string name = entry.get<std::string>();
  if (name.rfind("G/", 0) == 0) name = name.substr(2);
  for (std::size_t i = 0; i < lat.names.size(); ++i)
    if (lat.names[i] == name) return static_cast<int>(i);
  throw ParseError("unknown subgroup class '" + name + "'");
}

}  // namespace

json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

GroupPtr parse_group(const json& j, const fs::path& dir) {
  return guarded("group", [&]() -> GroupPtr {
    if (j.is_string()) {
      const fs::path p = dir / j.get<std::string>();
      return parse_group(load_json(p), p.parent_path());
    }
    if (j.contains("named")) return catalogue::by_name(j.at("named").get<std::string>());
    if (j.contains("table")) return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<Element>>>());
    if (j.contains("generators"))
      return FiniteGroup::from_permutations(field(j, "degree").get<int>(),
                                            j.at("generators").get<std::vector<std::vector<int>>>());
    throw ParseError("group needs 'named', 'table' or 'degree'/'generators'");
  });
}

GSet parse_gset(const json& j, const GroupPtr& G) {
  return guarded("G-set", [&]() -> GSet {
    if (j.contains("orbits")) {
      GSet X = GSet::empty(G);
      for (const auto& entry : j.at("orbits"))
        X = disjoint_union(X, coset_gset(class_representative(G, class_by_label(G, entry))));
      return X;
    }
    const int n = field(j, "size").get<int>();
    auto rows = field(j, "action").get<std::vector<std::vector<int>>>();
    if (n == 0 && rows.empty()) return GSet::empty(G);
    if (rows.size() != static_cast<std::size_t>(G->order()))
      throw NotAnAction("action needs one row per group element");
    for (const auto& r : rows)
      if (r.size() != static_cast<std::size_t>(n)) throw NotAnAction("action row of the wrong length");
    return GSet::from_table(G, rows);
  });
}

GMap parse_gmap(const json& j, const GSet& source, const GSet& target) {
  return guarded("map", [&] { return GMap(source, target, j.get<std::vector<int>>()); });
}

GCWComplex parse_complex(const json& j, const fs::path& dir) {
  return guarded("complex", [&] {
    GroupPtr G = parse_group(field(j, "group"), dir);
    std::vector<GSet> cells;
    for (const auto& c : field(j, "cells")) cells.push_back(parse_gset(c, G));
    return GCWComplex(G, std::move(cells), j.value("name", std::string{}));
  });
}

LabeledGCW parse_labeled_complex(const json& j, const fs::path& dir) {
  return guarded("labeled complex", [&] {
    GCWComplex X = parse_complex(j, dir);
    if (!j.contains("base") && !j.contains("labels")) return over_point(X);
    GSet base = parse_gset(field(j, "base"), X.group());
    const auto& labels = field(j, "labels");
    if (labels.size() != X.levels()) throw ParseError("need one label array per dimension");
    std::vector<GMap> maps;
    for (std::size_t k = 0; k < X.levels(); ++k) maps.push_back(parse_gmap(labels[k], X.cells(k), base));
    return LabeledGCW(X, base, std::move(maps));
  });
}

Span parse_span(const json& j, const fs::path& dir) {
  return guarded("span", [&] {
    GroupPtr G = parse_group(field(j, "group"), dir);
    GSet X = parse_gset(field(j, "source"), G);
    GSet U = parse_gset(field(j, "apex"), G);
    GSet Y = parse_gset(field(j, "target"), G);
    return make_span(parse_gmap(field(j, "left"), U, X), parse_gmap(field(j, "right"), U, Y));
  });
}

SquaresPresentation parse_presentation(const json& j) {
  return guarded("presentation", [&] {
    SquaresPresentation P;
    P.objects = field(j, "objects").get<std::vector<std::string>>();
    P.basepoint = field(j, "basepoint").get<std::string>();
    const json squares = j.value("squares", json::array());
    const json coproducts = j.value("coproducts", json::object());
    for (const auto& sq : squares) {
      auto corners = sq.get<std::vector<std::string>>();
      if (corners.size() != 4) throw ParseError("a square has four corners");
      P.squares.push_back({corners[0], corners[1], corners[2], corners[3]});
    }
    for (const auto& item : coproducts.items()) {
      const std::string& key = item.key();
      auto comma = key.find(',');
      if (comma == std::string::npos) throw ParseError("coproduct key must be 'A,B': " + key);
      std::string a = key.substr(0, comma), b = key.substr(comma + 1);
      P.coproducts[{a, b}] = item.value().get<std::string>();
    }
    P.validate();
    return P;
  });
}

std::map<std::string, std::vector<std::int64_t>> parse_assignment(const json& j) {
  return guarded("assignment", [&] { return j.get<std::map<std::string, std::vector<std::int64_t>>>(); });
}

json to_json(const FiniteGroup& G) { return {{"table", G.table()}}; }

json to_json(const GSet& X) { return {{"size", X.size()}, {"action", X.table()}}; }

json to_json(const BurnsideElement& a) {
  const auto& names = a.group()->lattice().names;
  return {{"coords", a.coords()},
          {"classes", names},
          {"orbit_form", to_orbit_string(a)},
          {"marks", marks(a)}};
}

json to_json(const Span& s) {
  return {{"source", to_json(s.source())},
          {"apex", to_json(s.apex())},
          {"target", to_json(s.target())},
          {"left", s.left.map},
          {"right", s.right.map}};
}

json to_json(const SquaresPresentation& P) {
  json squares = json::array();
  for (const auto& sq : P.squares) squares.push_back({sq[0], sq[1], sq[2], sq[3]});
  json coproducts = json::object();
  for (const auto& [pair, x] : P.coproducts) coproducts[pair.first + "," + pair.second] = x;
  return {{"objects", P.objects}, {"basepoint", P.basepoint}, {"squares", squares}, {"coproducts", coproducts}};
}

json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const FPAbelianGroup& A) {
  json torsion = json::array();
  for (const auto& t : A.torsion) torsion.push_back(to_json(t));
  json classes = json::object();
  for (std::size_t i = 0; i < A.objects.size(); ++i) {
    json c = json::array();
    for (const auto& x : A.classes[i]) c.push_back(to_json(x));
    classes[A.objects[i]] = c;
  }
  return {{"rank", A.rank}, {"torsion", torsion}, {"group", describe_group(A)}, {"classes", classes}};
}

}  // namespace gsk::io
