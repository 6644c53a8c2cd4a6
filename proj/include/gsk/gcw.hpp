#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsk/burnside.hpp"
#include "gsk/span.hpp"

namespace gsk {

/// A finite G-CW complex recorded by its cell G-sets; cells[k] holds the k-cells.
/// Attaching maps are not stored: every invariant computed here depends only on
/// the graded cell sets.
class GCWComplex {
 public:
  GCWComplex() = default;
  GCWComplex(GroupPtr group, std::vector<GSet> cells, std::string name = {});

  const GroupPtr& group() const { return group_; }
  const std::vector<GSet>& cells() const { return cells_; }
  const GSet& cells(std::size_t k) const { return cells_[k]; }
  /// Number of cell dimensions stored (top dimension + 1).
  std::size_t levels() const { return cells_.size(); }
  const std::string& name() const { return name_; }

 private:
  GroupPtr group_;
  std::vector<GSet> cells_;
  std::string name_;
};

/// A complex with an equivariant labeling of each cell set by a base G-set.
struct LabeledGCW {
  GCWComplex complex;
  GSet base;
  std::vector<GMap> labels;

  LabeledGCW() = default;
  LabeledGCW(GCWComplex complex, GSet base, std::vector<GMap> labels);
};

/// Sum over k of (-1)^k [Cell_k].
BurnsideElement euler_char(const GCWComplex& X);
/// chi(X^H) as the alternating count of H-fixed cells.
std::int64_t fixed_euler(const GCWComplex& X, const Subgroup& H);
/// Coefficient of [G/H] computed as the relative Euler characteristic of the
/// pair (X^H/WH, union over K > H of X^K/WH), cell by cell.
BurnsideElement euler_via_strata(const GCWComplex& X);

GCWComplex disjoint_union(const GCWComplex& X, const GCWComplex& Y);

/// Per dimension, pairs (cell of X, cell of Y) glued together.
struct CellIdentification {
  std::vector<std::vector<std::pair<int, int>>> pairs;
};

/// X union Y with identified cells counted once: cells of X, then the
/// unidentified cells of Y in ascending order.
GCWComplex union_with_shared_subcomplex(const GCWComplex& X, const GCWComplex& Y, const CellIdentification& id);
/// The common subcomplex, indexed by its X-side cells.
GCWComplex shared_subcomplex(const GCWComplex& X, const GCWComplex& Y, const CellIdentification& id);

/// Cells over `base_point` with the action restricted to its stabilizer.
GCWComplex fiber_over(const LabeledGCW& M, int base_point);
/// Fiber over the identity coset when the base is coset_gset(H).
GCWComplex fiber_over_identity(const LabeledGCW& M, const Subgroup& H);
/// Pulls each label back along s.left and relabels through s.right.
LabeledGCW transport(const LabeledGCW& M, const Span& s);
/// G x_H N over G/H, labeled by the orbit projection.
LabeledGCW induce_labeled(const Subgroup& H, const GCWComplex& N);
/// Every cell labeled by the one-point G-set.
LabeledGCW over_point(const GCWComplex& X);

/// The same complex with each cell set transported along h -> g h g^-1.
GCWComplex conjugate_complex(const Subgroup& H, const GCWComplex& N, Element g);
GCWComplex restrict_complex(const GCWComplex& X, const Subgroup& K);

}  // namespace gsk
