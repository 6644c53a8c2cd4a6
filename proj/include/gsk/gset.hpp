#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gsk/group.hpp"

namespace gsk {

/// A finite left G-set stored as its full action table.
class GSet {
 public:
  GSet() = default;
  /// action[g * size + x] = g.x; validated.
  GSet(GroupPtr group, int size, std::vector<int> action);
  /// action[g][x] = g.x; validated.
  static GSet from_table(GroupPtr group, const std::vector<std::vector<int>>& action);

  static GSet empty(GroupPtr group);
  static GSet point(GroupPtr group);
  /// n points, every element acting as the identity.
  static GSet trivial(GroupPtr group, int n);
  /// G acting on itself by left translation.
  static GSet regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(Element g, int x) const { return action_[static_cast<std::size_t>(g) * size_ + x]; }
  std::vector<std::vector<int>> table() const;
  const std::vector<int>& raw() const { return action_; }

  friend bool operator==(const GSet& a, const GSet& b) {
    return same_group(a.group_, b.group_) && a.size_ == b.size_ && a.action_ == b.action_;
  }

 private:
  struct Unchecked {};
  GSet(Unchecked, GroupPtr group, int size, std::vector<int> action)
      : group_(std::move(group)), size_(size), action_(std::move(action)) {}
  friend GSet make_unchecked(GroupPtr, int, std::vector<int>);

  GroupPtr group_;
  int size_ = 0;
  std::vector<int> action_;
};

/// An equivariant map; the constructor checks equivariance.
struct GMap {
  GSet source;
  GSet target;
  std::vector<int> map;

  GMap() = default;
  GMap(GSet source, GSet target, std::vector<int> map);

  int operator()(int x) const { return map[x]; }
};

GMap identity_map(const GSet& X);
/// outer after inner
GMap compose(const GMap& outer, const GMap& inner);
/// The unique map to the one-point G-set.
GMap terminal_map(const GSet& X);

std::vector<int> orbit_of(const GSet& X, int x);
Subgroup stabilizer(const GSet& X, int x);
std::vector<int> fixed_points(const GSet& X, const Subgroup& H);
/// Orbits as sorted point lists, ordered by minimal point.
std::vector<std::vector<int>> orbits(const GSet& X);
/// orbit_id[x] for each point, numbered as in orbits().
std::vector<int> orbit_ids(const GSet& X);

/// Left cosets gH, ordered by their minimal member.
GSet coset_gset(const Subgroup& H);
/// Index of the coset eH in coset_gset(H).
int identity_coset(const Subgroup& H);
/// Index of the coset gH in coset_gset(H).
int coset_index(const Subgroup& H, Element g);
/// gK -> gH for K <= H.
GMap coset_projection(const Subgroup& K, const Subgroup& H);
/// The equivariant map G/H -> X sending eH to x; requires H <= Stab(x).
GMap orbit_map(const Subgroup& H, const GSet& X, int x);

/// Stabilizer class index of each orbit, sorted.
struct IsoType {
  std::vector<int> classes;
  friend bool operator==(const IsoType&, const IsoType&) = default;
};

IsoType iso_type(const GSet& X);
bool gsets_isomorphic(const GSet& X, const GSet& Y);

/// X then Y.
GSet disjoint_union(const GSet& X, const GSet& Y);
/// (x, y) at index x * |Y| + y, diagonal action.
GSet product(const GSet& X, const GSet& Y);
/// The sub-G-set on an invariant subset, re-indexed in ascending order.
GSet sub_gset(const GSet& X, std::span<const int> invariant_subset);
/// Renames point x to perm[x].
GSet relabel(const GSet& X, std::span<const int> perm);

struct Pullback {
  GSet apex;
  GMap left;   // apex -> f.source
  GMap right;  // apex -> g.source
};

/// {(x, y) : f(x) = g(y)}, lexicographic order.
Pullback pullback(const GMap& f, const GMap& g);

/// X viewed as an H-set over subgroup_as_group(H).
GSet restrict_action(const GSet& X, const Subgroup& H);
/// G x_K X for a K-set X over subgroup_as_group(K). Point (r, x) sits at
/// r * |X| + x, where r indexes the cosets of coset_gset(K).
GSet induce(const Subgroup& K, const GSet& X);
/// An H-set transported to gHg^-1 along h -> ghg^-1.
GSet conjugate_action(const Subgroup& H, const GSet& X, Element g);

/// Orbits of N on an N-stable subset of X. When built from a quotient M/N the
/// residual action of the quotient group on the orbits is recorded too.
struct OrbitSpace {
  int size = 0;
  std::vector<int> point_of;         // point of X -> orbit index, -1 outside the subset
  std::vector<int> representatives;  // minimal point of each orbit, ascending
  std::optional<GSet> residual;
};

OrbitSpace orbit_space(const GSet& X, const Subgroup& N);
OrbitSpace orbit_space(const GSet& X, const Subgroup& N, std::span<const int> subset);
OrbitSpace orbit_space(const GSet& X, const QuotientGroup& Q, std::span<const int> subset);
OrbitSpace orbit_space(const GSet& X, const QuotientGroup& Q);

GSet make_unchecked(GroupPtr group, int size, std::vector<int> action);

}  // namespace gsk
