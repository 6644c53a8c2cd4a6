#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsk/matrix.hpp"

namespace gsk {

using Element = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Largest group order accepted by the builders. Reads GSK_GROUP_CAP, default 512.
std::size_t group_cap();

/// A subgroup of `parent`, stored as its sorted element indices.
struct Subgroup {
  GroupPtr parent;
  std::vector<Element> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Element g) const;
  /// True when every element of this subgroup lies in `other`.
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Conjugacy-class structure of the full subgroup lattice, computed once per group.
/// Subgroups are listed by (order, sorted element list); classes by their
/// representative, which is the first member in that order.
struct SubgroupLattice {
  std::vector<std::vector<Element>> subgroups;
  std::vector<int> class_of;                  // subgroup index -> class index
  std::vector<std::vector<int>> classes;      // class index -> member subgroup indices
  std::vector<int> representative;            // class index -> subgroup index
  std::vector<std::vector<char>> subconjugate;  // [i][j]: (H_i) is subconjugate to (H_j)
  Matrix<std::int64_t> marks;                 // [i][j] = |(G/H_i)^{H_j}|
  std::vector<std::string> names;             // printable class labels

  std::size_t class_count() const { return classes.size(); }
  /// Index of a subgroup given as a sorted element list, or -1.
  int index_of(std::span<const Element> sorted_elements) const;

  std::unordered_map<std::string, int> index_;
};

class FiniteGroup {
  struct Private {};

 public:
  FiniteGroup(Private, int order, std::vector<Element> table);
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  /// Validates a Cayley table (row g, column h holds g*h); identity is detected.
  static GroupPtr from_table(const std::vector<std::vector<Element>>& table);
  /// Closure of permutation generators; elements in breadth-first discovery order
  /// from the identity, so element 0 is the identity.
  static GroupPtr from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    std::size_t cap = group_cap());

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  /// g h g^-1
  Element conjugate(Element g, Element h) const { return mul(mul(g, h), inverse_[g]); }
  Element element_order(Element g) const;
  bool is_abelian() const;

  std::vector<std::vector<Element>> table() const;
  bool same_table(const FiniteGroup& other) const;

  const SubgroupLattice& lattice() const;

  /// The subgroup materialized as its own group; element i is H.elements[i].
  /// Cached per subgroup, so repeated calls return the same pointer.
  GroupPtr subgroup_group(const std::vector<Element>& sorted_elements) const;

 private:
  int order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
  mutable std::mutex subgroup_cache_mutex_;
  mutable std::map<std::vector<Element>, GroupPtr> subgroup_cache_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// H as a standalone group, elements relabeled 0..|H|-1 in ascending parent index.
GroupPtr subgroup_as_group(const Subgroup& H);
/// Index of parent element g inside H.elements; -1 if absent.
int local_index(const Subgroup& H, Element g);

Subgroup whole_group(const GroupPtr& G);
Subgroup trivial_subgroup(const GroupPtr& G);
/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const GroupPtr& G, std::span<const Element> generators);
/// Validates closure and identity; throws InvalidArgument otherwise.
Subgroup make_subgroup(const GroupPtr& G, std::vector<Element> elements);
Subgroup conjugate(const Subgroup& H, Element g);

/// Every subgroup, from cyclic subgroups saturated under joins.
std::vector<Subgroup> all_subgroups(const GroupPtr& G);

/// Conjugacy classes of subgroups, smallest first.
struct SubgroupClassTable {
  GroupPtr group;
  std::vector<std::vector<Subgroup>> classes;
  std::vector<Subgroup> representatives;
  std::vector<std::string> names;

  std::size_t size() const { return classes.size(); }
  /// Class index of an arbitrary subgroup of `group`.
  int class_of(const Subgroup& H) const;
  /// (H_i) is conjugate to a subgroup of H_j.
  bool subconjugate(int i, int j) const;
};

SubgroupClassTable subgroup_classes(const GroupPtr& G);
int class_index(const Subgroup& H);
Subgroup class_representative(const GroupPtr& G, int class_index);

Subgroup normalizer(const Subgroup& H);

/// source / kernel, with one representative (minimal element index) per coset.
/// Quotient element q is the coset of representatives[q]; representatives ascend.
struct QuotientGroup {
  GroupPtr group;
  Subgroup source;
  Subgroup kernel;
  std::vector<Element> representatives;
  std::vector<int> projection;  // parent element -> quotient element, -1 outside source

  int project(Element g) const { return projection[g]; }
};

QuotientGroup quotient(const Subgroup& source, const Subgroup& kernel);
/// N_G(H)/H.
QuotientGroup weyl_group(const Subgroup& H);

/// Minimal representative of each double coset K g H, ascending.
std::vector<Element> double_cosets(const Subgroup& K, const Subgroup& H);
/// The double coset K g H as a sorted element list.
std::vector<Element> double_coset(const Subgroup& K, Element g, const Subgroup& H);

}  // namespace gsk
