#include "gsk/squares_k0.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gsk {

namespace {

std::pair<std::string, std::string> unordered(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::string show_square(const std::array<std::string, 4>& s) {
  return "(" + s[0] + "," + s[1] + "," + s[2] + "," + s[3] + ")";
}

std::string show_vector(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

void SquaresPresentation::validate() const {
  std::set<std::string> seen;
  for (const auto& o : objects)
    if (!seen.insert(o).second) throw InvalidArgument("duplicate object " + o);
  if (!seen.count(basepoint)) throw InvalidArgument("basepoint '" + basepoint + "' is not an object");
  for (const auto& sq : squares)
    for (const auto& c : sq)
      if (!seen.count(c)) throw UnknownObject(c + " in square " + show_square(sq));
  for (const auto& [pair, x] : coproducts)
    for (const auto* name : {&pair.first, &pair.second, &x})
      if (!seen.count(*name)) throw UnknownObject(*name + " in coproduct witness");
}

int SquaresPresentation::index_of(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) throw UnknownObject(name);
  return static_cast<int>(it - objects.begin());
}

const std::vector<BigInt>& FPAbelianGroup::class_of(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) throw UnknownObject(name);
  return classes[it - objects.begin()];
}

FPAbelianGroup present_k0(const SquaresPresentation& P) {
  P.validate();
  const std::size_t n = P.objects.size();
  const std::size_t r = P.squares.size() + 1;
  BigMatrix R(r, n);
  for (std::size_t s = 0; s < P.squares.size(); ++s) {
    const auto& sq = P.squares[s];
    R(s, P.index_of(sq[0])) += 1;
    R(s, P.index_of(sq[3])) += 1;
    R(s, P.index_of(sq[1])) -= 1;
    R(s, P.index_of(sq[2])) -= 1;
  }
  R(r - 1, P.index_of(P.basepoint)) = 1;

  // Row relations span the kernel of Z^n -> K0; x -> xV carries them onto the rows of D.
  const SNFResult snf = smith_normal_form(R);
  std::vector<std::size_t> torsion_cols, free_cols;
  FPAbelianGroup G;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= snf.diagonal.size() || sgn(snf.diagonal[j]) == 0) {
      free_cols.push_back(j);
    } else if (snf.diagonal[j] != 1) {
      torsion_cols.push_back(j);
      G.torsion.push_back(snf.diagonal[j]);
    }
  }
  G.rank = static_cast<int>(free_cols.size());
  G.objects = P.objects;
  G.relations = R;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> c;
    for (std::size_t t = 0; t < torsion_cols.size(); ++t) {
      BigInt x;
      mpz_fdiv_r(x.get_mpz_t(), snf.V(i, torsion_cols[t]).get_mpz_t(), G.torsion[t].get_mpz_t());
      c.push_back(x);
    }
    for (std::size_t j : free_cols) c.push_back(snf.V(i, j));
    G.classes.push_back(std::move(c));
  }
  return G;
}

bool classes_equal(const FPAbelianGroup& G, const std::string& a, const std::string& b) {
  return G.class_of(a) == G.class_of(b);
}

std::string describe_group(const FPAbelianGroup& G) {
  std::vector<std::string> parts;
  for (const auto& t : G.torsion) parts.push_back("Z/" + t.get_str());
  if (G.rank == 1) parts.push_back("Z");
  if (G.rank > 1) parts.push_back("Z^" + std::to_string(G.rank));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

StarReport check_star(const SquaresPresentation& P) {
  P.validate();
  const std::string& O = P.basepoint;
  std::set<std::array<std::string, 4>> present(P.squares.begin(), P.squares.end());
  auto has = [&](const std::string& a, const std::string& b, const std::string& x) {
    return present.count({O, a, b, x}) > 0;
  };

  StarReport rep;
  std::set<std::pair<std::string, std::string>> witnessed;
  for (const auto& [pair, x] : P.coproducts) {
    const auto& [a, b] = pair;
    bool ok = true;
    if (!has(a, b, x)) {
      rep.missing_squares.push_back(show_square({O, a, b, x}));
      ok = false;
    }
    if (a != b && !has(b, a, x)) {
      rep.missing_squares.push_back(show_square({O, b, a, x}));
      ok = false;
    }
    if (ok)
      witnessed.insert(unordered(a, b));
    else
      rep.uncovered.push_back(unordered(a, b));
  }

  std::vector<std::string> objs;
  for (const auto& o : P.objects)
    if (o != O) objs.push_back(o);
  std::sort(objs.begin(), objs.end());
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = i; j < objs.size(); ++j) {
      const auto& a = objs[i];
      const auto& b = objs[j];
      if (witnessed.count({a, b})) continue;
      bool covered = false;
      for (const auto& x : P.objects)
        if (has(a, b, x) && has(b, a, x)) {
          covered = true;
          break;
        }
      if (!covered) rep.unwitnessed.emplace_back(a, b);
    }
  return rep;
}

InvariantReport validate_invariant(const SquaresPresentation& P,
                                   const std::map<std::string, std::vector<std::int64_t>>& assignment) {
  P.validate();
  std::size_t width = 0;
  bool first = true;
  for (const auto& o : P.objects) {
    auto it = assignment.find(o);
    if (it == assignment.end()) throw InvalidArgument("no value assigned to " + o);
    if (first) width = it->second.size();
    if (it->second.size() != width) throw InvalidArgument("value of " + o + " has the wrong length");
    first = false;
  }

  InvariantReport rep;
  const auto& base = assignment.at(P.basepoint);
  if (std::any_of(base.begin(), base.end(), [](std::int64_t x) { return x != 0; })) {
    rep.pass = false;
    rep.violations.push_back("basepoint " + P.basepoint + " has value " + show_vector(base));
  }
  for (const auto& sq : P.squares) {
    const auto &a = assignment.at(sq[0]), &b = assignment.at(sq[1]);
    const auto &c = assignment.at(sq[2]), &d = assignment.at(sq[3]);
    std::vector<std::int64_t> lhs(width), rhs(width);
    for (std::size_t i = 0; i < width; ++i) {
      lhs[i] = a[i] + d[i];
      rhs[i] = b[i] + c[i];
    }
    if (lhs != rhs) {
      rep.pass = false;
      rep.violations.push_back("square " + show_square(sq) + ": " + show_vector(lhs) + " != " + show_vector(rhs));
    }
  }
  return rep;
}

}  // namespace gsk
