#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsk/burnside.hpp"
#include "gsk/gcw.hpp"

namespace gsk {

/// Real irreducible representation of the cyclic group of order n, with the
/// generator acting trivially, by -1, or by rotation through 2 pi j / n.
struct RealIrrep {
  enum class Kind { Trivial, Sign, Rotation };
  int n = 1;
  Kind kind = Kind::Trivial;
  int j = 0;

  int dimension() const { return kind == Kind::Rotation ? 2 : 1; }
  std::string name() const;

  friend auto operator<=>(const RealIrrep&, const RealIrrep&) = default;
};

RealIrrep trivial_irrep(int n);
RealIrrep sign_irrep(int n);
/// rotation(j) with j reduced to 1 <= j <= (n-1)/2 via j ~ n - j.
RealIrrep rotation_irrep(int n, int j);

/// trivial, sign (n even), rotation(1), ..., rotation((n-1)/2).
std::vector<RealIrrep> real_irreps_cyclic(int n);

/// [H, U] with U a multiset of nontrivial irreducibles of the cyclic group H,
/// stored sorted. H is recorded by its subgroup class index in G; the
/// generator of H is its smallest element index of order |H|.
struct SliceType {
  int subgroup_class = 0;
  std::vector<RealIrrep> representation;

  friend auto operator<=>(const SliceType&, const SliceType&) = default;
};

SliceType make_slice_type(const Subgroup& H, std::vector<RealIrrep> representation);
std::string slice_type_name(const GroupPtr& G, const SliceType& t);

using SliceVector = std::map<SliceType, std::int64_t>;

std::int64_t evaluate(const SliceVector& v, const SliceType& t);
std::string slice_vector_string(const GroupPtr& G, const SliceVector& v);

/// Slice vector of G x_K RP(R + T): |G/K| at [K, T] and 0 elsewhere. Requires
/// G abelian of odd order, K cyclic and T a nontrivial irreducible of K.
SliceVector projective_generator_slice_vector(const GroupPtr& G, const Subgroup& K, const RealIrrep& T);

/// Cells of RP(R + V) for a fixed-point-free rotation V of C_p: a fixed
/// point and a free orbit in dimension 0, two free orbits in dimension 1 and
/// one in dimension 2.
GCWComplex projective_plane_model(const GroupPtr& G);

struct CounterexampleReport {
  int p = 0;
  GCWComplex model;
  BurnsideElement chi_first;   // RP(R + rotation(1))
  BurnsideElement chi_second;  // RP(R + rotation(2))
  SliceVector slices_first;
  SliceVector slices_second;
  bool euler_agree = false;
  bool marks_are_one = false;
  bool slices_differ = false;

  bool pass() const { return euler_agree && marks_are_one && slices_differ; }
};

/// Requires p prime and p >= 5.
CounterexampleReport counterexample_report(int p);

}  // namespace gsk
