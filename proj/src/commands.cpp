#include "gsk/commands.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

#include "gsk/catalogue.hpp"
#include "gsk/io.hpp"
#include "gsk/mackey.hpp"
#include "gsk/random.hpp"
#include "gsk/slice.hpp"
#include "gsk/snf.hpp"
#include "gsk/squares_k0.hpp"

namespace gsk::cli {

namespace {

using io::json;

std::string row(const std::string& label, const std::vector<std::string>& cells, int width = 8) {
  std::ostringstream os;
  os << std::left << std::setw(14) << label;
  for (const auto& c : cells) os << std::right << std::setw(width) << c;
  return os.str();
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

std::vector<std::string> class_labels(const GroupPtr& G) {
  std::vector<std::string> out;
  for (const auto& n : G->lattice().names) out.push_back(n);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// Sum of coefficient * class over the objects, reduced in canonical coordinates.
std::vector<BigInt> combine(const FPAbelianGroup& A, const std::vector<std::pair<std::string, int>>& terms) {
  const std::size_t width = A.torsion.size() + static_cast<std::size_t>(A.rank);
  std::vector<BigInt> out(width, 0);
  for (const auto& [name, c] : terms) {
    const auto& v = A.class_of(name);
    for (std::size_t i = 0; i < width; ++i) out[i] += c * v[i];
  }
  for (std::size_t t = 0; t < A.torsion.size(); ++t)
    mpz_fdiv_r(out[t].get_mpz_t(), out[t].get_mpz_t(), A.torsion[t].get_mpz_t());
  return out;
}

bool relations_vanish(const SquaresPresentation& P, const FPAbelianGroup& A, std::vector<std::string>& bad) {
  const std::size_t width = A.torsion.size() + static_cast<std::size_t>(A.rank);
  const std::vector<BigInt> zero(width, 0);
  for (const auto& sq : P.squares)
    if (combine(A, {{sq[0], 1}, {sq[3], 1}, {sq[1], -1}, {sq[2], -1}}) != zero)
      bad.push_back("(" + join({sq[0], sq[1], sq[2], sq[3]}, ",") + ")");
  if (combine(A, {{P.basepoint, 1}}) != zero) bad.push_back("basepoint " + P.basepoint);
  return bad.empty();
}

std::string show_class(const std::vector<BigInt>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return "(" + join(parts, ", ") + ")";
}

// Counts cases and keeps the first few failures.
struct Tally {
  Check check;
  int cases = 0;

  explicit Tally(std::string name) { check.name = std::move(name); }
  void record(bool ok, const std::function<std::string()>& why) {
    ++cases;
    if (ok) return;
    check.pass = false;
    if (check.witnesses.size() < 5) check.witnesses.push_back(why());
  }
};

}  // namespace

RunReport cmd_euler(const fs::path& complex_file) {
  RunReport r;
  r.command = "euler";
  const GCWComplex X = io::parse_complex(io::load_json(complex_file), complex_file.parent_path());
  const GroupPtr& G = X.group();
  const auto chi = euler_char(X);
  const auto strata = euler_via_strata(X);
  const auto ghost = marks(chi);
  const auto table = subgroup_classes(G);
  std::vector<std::int64_t> fixed;
  for (const auto& H : table.representatives) fixed.push_back(fixed_euler(X, H));

  r.data = {{"name", X.name()},
            {"group_order", G->order()},
            {"euler_char", io::to_json(chi)},
            {"euler_via_strata", io::to_json(strata)},
            {"fixed_euler", fixed}};
  const auto labels = class_labels(G);
  r.text.push_back("complex " + (X.name().empty() ? std::string("(unnamed)") : X.name()) + " over a group of order " +
                   std::to_string(G->order()) + ", " + std::to_string(X.levels()) + " cell dimensions");
  r.text.push_back(row("class", labels));
  r.text.push_back(row("chi_G", strings(chi.coords())));
  r.text.push_back(row("strata", strings(strata.coords())));
  r.text.push_back(row("marks", strings(ghost)));
  r.text.push_back(row("chi(X^H)", strings(fixed)));
  r.text.push_back("chi_G = " + to_orbit_string(chi));
  r.text.push_back(chi == strata ? "AGREE" : "DISAGREE");

  r.add("strata formula equals the cell sum", chi == strata,
        chi == strata ? std::vector<std::string>{} : std::vector<std::string>{to_orbit_string(strata)});
  r.add("marks equal fixed-point Euler characteristics", ghost == fixed);
  return r;
}

RunReport cmd_marks(const fs::path& group_file) {
  RunReport r;
  r.command = "marks";
  const GroupPtr G = io::parse_group(group_file.string());
  const auto T = table_of_marks(G);
  const auto table = subgroup_classes(G);
  const auto labels = class_labels(G);

  std::vector<std::string> bad;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const GSet X = coset_gset(table.representatives[i]);
    for (std::size_t j = 0; j < table.size(); ++j) {
      auto count = static_cast<std::int64_t>(fixed_points(X, table.representatives[j]).size());
      if (count != T.marks(i, j)) bad.push_back("G/" + labels[i] + " fixed by " + labels[j]);
    }
  }
  std::vector<std::string> weyl_bad;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto w = static_cast<std::int64_t>(weyl_group(table.representatives[i]).group->order());
    if (w != T.marks(i, i)) weyl_bad.push_back(labels[i]);
  }

  r.data = {{"group_order", G->order()}, {"classes", labels}, {"marks", T.marks.to_rows()}};
  r.text.push_back("table of marks, row G/H, column K: |(G/H)^K|");
  r.text.push_back(row("", labels));
  for (std::size_t i = 0; i < table.size(); ++i) r.text.push_back(row("G/" + labels[i], strings(T.marks.row(i))));
  r.add("marks agree with fixed points of coset sets", bad.empty(), bad);
  r.add("diagonal entries are Weyl group orders", weyl_bad.empty(), weyl_bad);
  return r;
}

RunReport cmd_burnside_mul(const fs::path& group_file, const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b) {
  RunReport r;
  r.command = "burnside-mul";
  const GroupPtr G = io::parse_group(group_file.string());
  const BurnsideElement x(G, a), y(G, b);
  const BurnsideElement p = mul(x, y);

  r.data = {{"a", io::to_json(x)}, {"b", io::to_json(y)}, {"product", io::to_json(p)}};
  r.text.push_back("a     = " + to_orbit_string(x));
  r.text.push_back("b     = " + to_orbit_string(y));
  r.text.push_back("a * b = " + to_orbit_string(p));
  r.text.push_back(to_marks_string(p));

  // Honest G-sets when both factors are: count orbits of the product directly.
  auto is_effective = [](const std::vector<std::int64_t>& v) {
    for (auto c : v)
      if (c < 0) return false;
    return true;
  };
  const bool small = marks(x)[0] * marks(y)[0] <= 1'000'000;
  if (is_effective(a) && is_effective(b) && small) {
    auto realize = [&](const std::vector<std::int64_t>& v) {
      GSet X = GSet::empty(G);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::int64_t k = 0; k < v[i]; ++k) X = disjoint_union(X, coset_gset(class_representative(G, static_cast<int>(i))));
      return X;
    };
    const auto direct = burnside_class(product(realize(a), realize(b)));
    r.add("product agrees with the orbits of X x Y", direct == p,
          direct == p ? std::vector<std::string>{} : std::vector<std::string>{to_orbit_string(direct)});
  }
  std::vector<std::int64_t> expected;
  const auto ma = marks(x), mb = marks(y);
  for (std::size_t i = 0; i < ma.size(); ++i) expected.push_back(ma[i] * mb[i]);
  r.add("marks are multiplicative", marks(p) == expected);
  return r;
}

RunReport cmd_mackey_check(const fs::path& group_file) {
  RunReport r;
  r.command = "mackey-check";
  const GroupPtr G = io::parse_group(group_file.string());
  const MackeyData M = burnside_mackey(G);
  const MackeyData D = burnside_mackey_direct(G);
  const auto table = subgroup_classes(G);
  const auto& lat = G->lattice();

  json pairs = json::array();
  int passed = 0, total = 0;
  std::vector<std::string> failures;
  r.text.push_back(row("K \\ H", class_labels(G), 6));
  for (const auto& K : table.representatives) {
    std::vector<std::string> cells;
    for (const auto& H : table.representatives) {
      auto rep = verify_double_coset(M, K, H);
      ++total;
      passed += rep.pass;
      const std::string kname = lat.names[lat.class_of[rep.k]], hname = lat.names[lat.class_of[rep.h]];
      cells.push_back(rep.pass ? "ok" : "FAIL");
      pairs.push_back({{"K", kname}, {"H", hname}, {"pass", rep.pass}});
      if (!rep.pass) {
        std::ostringstream os;
        os << "K=" << kname << " H=" << hname << " lhs=" << rep.lhs << " rhs=" << rep.rhs;
        failures.push_back(os.str());
      }
    }
    r.text.push_back(row(lat.names[lat.class_of[M.index_of(K)]], cells, 6));
  }
  r.text.push_back(std::to_string(passed) + "/" + std::to_string(total) + " double-coset pairs pass");

  for (const auto& c : verify_mackey_axioms(M)) {
    if (c.name.rfind("double coset", 0) == 0) continue;
    r.add(c.name, c.pass, c.pass ? std::vector<std::string>{} : std::vector<std::string>{c.witness});
  }
  r.add("double coset formula", passed == total, failures);
  const bool same = M.res == D.res && M.tr == D.tr && M.conj == D.conj;
  r.add("span construction equals restrict/induce/conjugate", same);
  r.data = {{"group_order", G->order()},
            {"subgroups", M.subgroups.size()},
            {"double_coset_pairs", pairs},
            {"passed", passed},
            {"total", total}};
  return r;
}

RunReport cmd_span_compose(const fs::path& first, const fs::path& second) {
  RunReport r;
  r.command = "span-compose";
  const Span s = io::parse_span(io::load_json(first), first.parent_path());
  const Span t = io::parse_span(io::load_json(second), second.parent_path());
  const SpanClass c = compose_spans(s, t);
  const Span& u = c.representative;

  const auto apex_classes = iso_type(u.apex()).classes;
  std::vector<std::string> orbit_names;
  for (int i : apex_classes) orbit_names.push_back("G/" + u.apex().group()->lattice().names[i]);
  r.data = {{"composite", io::to_json(u)}, {"canonical_form", c.form}, {"apex_orbits", orbit_names}};
  r.text.push_back("apex: " + std::to_string(u.apex().size()) + " points, orbits " +
                   (orbit_names.empty() ? std::string("(empty)") : join(orbit_names, " + ")));
  r.text.push_back("left:  " + join(strings(u.left.map), " "));
  r.text.push_back("right: " + join(strings(u.right.map), " "));

  r.add("composite apex has the size of the pullback", [&] {
    int n = 0;
    for (int x = 0; x < s.apex().size(); ++x)
      for (int y = 0; y < t.apex().size(); ++y) n += s.right(x) == t.left(y);
    return n == u.apex().size();
  }());
  const bool small = u.apex().size() <= kApexCap;
  if (small) {
    const bool unit = spans_equal(compose_span_diagrams(u, identity_span(u.target())), u) &&
                      spans_equal(compose_span_diagrams(identity_span(u.source()), u), u);
    r.add("identity spans are units for the composite", unit);
  }
  return r;
}

RunReport cmd_k0(const fs::path& presentation_file, const std::optional<std::pair<std::string, std::string>>& classes,
                 const std::optional<fs::path>& invariant_file) {
  RunReport r;
  r.command = "k0";
  const SquaresPresentation P = io::parse_presentation(io::load_json(presentation_file));
  const FPAbelianGroup A = present_k0(P);
  const StarReport star = check_star(P);

  r.data = {{"k0", io::to_json(A)}};
  r.text.push_back("K0 = " + describe_group(A));
  for (std::size_t i = 0; i < A.objects.size(); ++i) r.text.push_back("  [" + A.objects[i] + "] = " + show_class(A.classes[i]));

  std::vector<std::string> bad;
  r.add("every relation vanishes in canonical coordinates", relations_vanish(P, A, bad), bad);

  auto pair_names = [](const std::vector<std::pair<std::string, std::string>>& v) {
    std::vector<std::string> out;
    for (const auto& [a, b] : v) out.push_back(a + "," + b);
    return out;
  };
  r.data["star"] = {{"certified", star.star_certified()},
                    {"missing_squares", star.missing_squares},
                    {"uncovered_pairs", pair_names(star.uncovered)},
                    {"unwitnessed_pairs", pair_names(star.unwitnessed)}};
  r.add("declared coproduct witnesses have both squares", star.uncovered.empty(), star.missing_squares);
  if (!star.unwitnessed.empty())
    r.text.push_back("warning: (*) is not verified for " + std::to_string(star.unwitnessed.size()) +
                     " object pairs; the presented group is not certified as K0 of an ambient category");

  std::optional<InvariantReport> inv;
  std::map<std::string, std::vector<std::int64_t>> assignment;
  if (invariant_file) {
    assignment = io::parse_assignment(io::load_json(*invariant_file));
    inv = validate_invariant(P, assignment);
    r.data["invariant"] = {{"pass", inv->pass}, {"violations", inv->violations}};
    r.add("invariant respects every square", inv->pass, inv->violations);
  }

  if (classes) {
    const auto& [a, b] = *classes;
    const bool equal = classes_equal(A, a, b);
    json verdict = {{"a", a}, {"b", b}, {"equal", equal}};
    std::string line = "[" + a + "] vs [" + b + "]: " + (equal ? "EQUAL" : "DISTINCT");
    if (inv && inv->pass) {
      const bool separated = assignment.at(a) != assignment.at(b);
      verdict["separated_by_invariant"] = separated;
      if (separated) line += " (separated by the invariant)";
      if (equal && separated) r.add("equal classes carry equal invariants", false, {a + " vs " + b});
    }
    r.data["classes"] = verdict;
    r.text.push_back(line);
  }
  return r;
}

RunReport cmd_slice(int p) {
  RunReport r;
  r.command = "slice-counterexample";
  const CounterexampleReport c = counterexample_report(p);
  const GroupPtr& G = c.model.group();

  r.data = {{"p", p},
            {"euler_first", io::to_json(c.chi_first)},
            {"euler_second", io::to_json(c.chi_second)},
            {"slices_first", slice_vector_string(G, c.slices_first)},
            {"slices_second", slice_vector_string(G, c.slices_second)}};
  std::ostringstream os;
  os << std::left << std::setw(22) << "" << std::setw(28) << "RP(R + rot(1))" << "RP(R + rot(2))";
  r.text.push_back(os.str());
  auto line = [](const std::string& label, const std::string& a, const std::string& b) {
    std::ostringstream s;
    s << std::left << std::setw(22) << label << std::setw(28) << a << b;
    return s.str();
  };
  r.text.push_back(line("chi_G", to_orbit_string(c.chi_first), to_orbit_string(c.chi_second)));
  r.text.push_back(line("ghost", to_marks_string(c.chi_first), to_marks_string(c.chi_second)));
  r.text.push_back(line("slice vector", slice_vector_string(G, c.slices_first), slice_vector_string(G, c.slices_second)));

  r.add("equivariant Euler characteristics agree", c.euler_agree);
  r.add("both have marks (1, 1)", c.marks_are_one);
  r.add("slice vectors differ at [C_p, rot(1)]", c.slices_differ);
  return r;
}

RunReport cmd_selftest(std::uint64_t seed) {
  RunReport r;
  r.command = "selftest";
  r.data = {{"seed", seed}};
  json sizes = json::object();
  auto finish = [&](Tally& t) {
    sizes[t.check.name] = t.cases;
    r.text.push_back(t.check.name + ": " + std::to_string(t.cases) + " cases");
    r.checks.push_back(t.check);
  };

  {
    Tally strata("euler: strata formula on random complexes");
    Tally ghost("euler: marks equal fixed-point counts");
    Rng rng(seed);
    for (const char* name : {"C2", "C3", "C4", "C2xC2", "S3", "D4", "C5"}) {
      const GroupPtr G = catalogue::by_name(name);
      const auto reps = subgroup_classes(G).representatives;
      for (int i = 0; i < 500; ++i) {
        const GCWComplex X = random_complex(G, rng);
        const auto chi = euler_char(X);
        strata.record(euler_via_strata(X) == chi, [&] { return std::string(name) + " case " + std::to_string(i); });
        std::vector<std::int64_t> fixed;
        for (const auto& H : reps) fixed.push_back(fixed_euler(X, H));
        ghost.record(marks(chi) == fixed, [&] { return std::string(name) + " case " + std::to_string(i); });
      }
    }
    finish(strata);
    finish(ghost);
  }

  {
    Tally prod("burnside: mul matches orbits of product G-sets");
    Tally inverse("burnside: from_marks inverts marks");
    Rng rng(seed + 1);
    for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
      const auto reps = subgroup_classes(G).representatives;
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
          const auto direct = burnside_class(product(coset_gset(reps[i]), coset_gset(reps[j])));
          const auto via = mul(BurnsideElement::basis(G, static_cast<int>(i)), BurnsideElement::basis(G, static_cast<int>(j)));
          prod.record(direct == via, [&, n = name] { return n + " " + std::to_string(i) + "x" + std::to_string(j); });
        }
      for (int k = 0; k < 1000; ++k) {
        const auto a = random_burnside(G, rng, 20);
        inverse.record(from_marks(G, marks(a)) == a, [&, n = name] { return n + " " + to_orbit_string(a); });
      }
    }
    finish(prod);
    finish(inverse);
  }

  {
    Tally axioms("mackey: axioms and double coset formula");
    Tally routes("mackey: span construction equals direct construction");
    for (const char* name : {"C2", "C4", "C2xC2", "C6", "S3", "D4", "Q8"}) {
      const GroupPtr G = catalogue::by_name(name);
      const MackeyData M = burnside_mackey(G);
      const MackeyData D = burnside_mackey_direct(G);
      for (const auto& c : verify_mackey_axioms(M))
        axioms.record(c.pass, [&] { return std::string(name) + ": " + c.name + ": " + c.witness; });
      routes.record(M.res == D.res && M.tr == D.tr && M.conj == D.conj, [&] { return std::string(name); });
    }
    finish(axioms);
    finish(routes);
  }

  {
    Tally transport("mackey: fiber chi transport matches res, tr and c_g");
    Rng rng(seed + 2);
    for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
      const MackeyData M = burnside_mackey(G);
      const auto subs = all_subgroups(G);
      for (const auto& H : subs)
        for (const auto& K : subs) {
          if (!K.is_subset_of(H)) continue;
          const auto over_h = random_labeled_complex(H, rng);
          const auto over_k = random_labeled_complex(K, rng);
          transport.record(sk_transport(M, restriction_span(H, K), over_h).agrees, [&, n = name] { return n + " res"; });
          transport.record(sk_transport(M, transfer_span(K, H), over_k).agrees, [&, n = name] { return n + " tr"; });
        }
      for (const auto& H : subs) {
        const auto over_h = random_labeled_complex(H, rng);
        for (Element g = 0; g < G->order(); ++g)
          transport.record(sk_transport(M, conjugation_span(H, g), over_h).agrees, [&, n = name] { return n + " conj"; });
      }
    }
    finish(transport);
  }

  {
    Tally spans("spans: composition is associative and unital");
    Rng rng(seed + 3);
    for (const char* name : {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"}) {
      const GroupPtr G = catalogue::by_name(name);
      for (int i = 0; i < 20; ++i) {
        GSet X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2), Z = random_gset(G, rng, 2), W = random_gset(G, rng, 2);
        const Span a = random_span(X, Y, rng, 2, 16), b = random_span(Y, Z, rng, 2, 16), c = random_span(Z, W, rng, 2, 16);
        const Span left = compose_span_diagrams(compose_span_diagrams(a, b), c);
        const Span right = compose_span_diagrams(a, compose_span_diagrams(b, c));
        const bool ok = canonical_form(left) == canonical_form(right) &&
                        canonical_form(compose_span_diagrams(identity_span(X), a)) == canonical_form(a) &&
                        canonical_form(compose_span_diagrams(a, identity_span(Y))) == canonical_form(a);
        spans.record(ok, [&] { return std::string(name) + " case " + std::to_string(i); });
      }
    }
    finish(spans);
  }

  {
    Tally snf("snf: U A V = D with unimodular transforms and a divisor chain");
    Rng rng(seed + 4);
    for (int i = 0; i < 200; ++i) {
      const int m = uniform_int(rng, 1, 12), n = uniform_int(rng, 1, 12);
      BigMatrix A(m, n);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) A(a, b) = uniform_int(rng, -9, 9);
      const SNFResult s = smith_normal_form(A);
      bool ok = s.U * A * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
      for (std::size_t a = 0; a < s.D.rows(); ++a)
        for (std::size_t b = 0; b < s.D.cols(); ++b)
          if (a != b && sgn(s.D(a, b)) != 0) ok = false;
      for (std::size_t t = 0; t < s.diagonal.size(); ++t) {
        if (sgn(s.diagonal[t]) < 0) ok = false;
        if (t + 1 < s.diagonal.size()) {
          if (sgn(s.diagonal[t]) == 0 && sgn(s.diagonal[t + 1]) != 0) ok = false;
          if (sgn(s.diagonal[t]) != 0 && !mpz_divisible_p(s.diagonal[t + 1].get_mpz_t(), s.diagonal[t].get_mpz_t())) ok = false;
        }
      }
      snf.record(ok, [&] { return std::to_string(m) + "x" + std::to_string(n) + " case " + std::to_string(i); });
    }
    finish(snf);
  }

  {
    Tally k0("k0: relations vanish on random presentations");
    Rng rng(seed + 5);
    for (int i = 0; i < 200; ++i) {
      const SquaresPresentation P = random_presentation(rng);
      const FPAbelianGroup A = present_k0(P);
      std::vector<std::string> bad;
      k0.record(relations_vanish(P, A, bad), [&] { return "case " + std::to_string(i) + " " + join(bad, " "); });
    }
    finish(k0);
  }

  {
    Tally slice("slice: counterexample for primes 5 to 23");
    for (int p : {5, 7, 11, 13, 17, 19, 23})
      slice.record(counterexample_report(p).pass(), [&] { return "p=" + std::to_string(p); });
    finish(slice);
  }

  r.data["cases"] = sizes;
  return r;
}

std::string render_text(const RunReport& r) {
  std::string out;
  for (const auto& line : r.text) out += line + "\n";
  for (const auto& c : r.checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name + "\n";
    for (const auto& w : c.witnesses) out += "     " + w + "\n";
  }
  return out;
}

}  // namespace gsk::cli
