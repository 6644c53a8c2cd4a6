#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsk/gset.hpp"

namespace gsk {

/// Virtual G-set in the orbit basis: coords[i] is the coefficient of [G/H_i],
/// with H_i the i-th subgroup class representative.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  BurnsideElement(GroupPtr group, std::vector<std::int64_t> coords);

  static BurnsideElement zero(GroupPtr group);
  static BurnsideElement one(GroupPtr group);
  static BurnsideElement basis(GroupPtr group, int class_index);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& b);
  BurnsideElement& operator-=(const BurnsideElement& b);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator-(BurnsideElement a);
  friend BurnsideElement operator*(std::int64_t k, BurnsideElement a);
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return same_group(a.group_, b.group_) && a.coords_ == b.coords_;
  }

 private:
  GroupPtr group_;
  std::vector<std::int64_t> coords_;
};

/// marks(i, j) = |(G/H_i)^{H_j}|, lower triangular in class order.
struct TableOfMarks {
  GroupPtr group;
  Matrix<std::int64_t> marks;
};

TableOfMarks table_of_marks(const GroupPtr& G);

BurnsideElement burnside_class(const GSet& X);
/// Ghost coordinates: component j is the number of H_j-fixed points.
std::vector<std::int64_t> marks(const BurnsideElement& a);
/// Inverse of marks by exact back-substitution; throws NotInImage when the
/// solution is not integral.
BurnsideElement from_marks(const GroupPtr& G, std::span<const std::int64_t> ghost);

BurnsideElement add(const BurnsideElement& a, const BurnsideElement& b);
/// Pointwise product in ghost coordinates, pulled back through from_marks.
BurnsideElement mul(const BurnsideElement& a, const BurnsideElement& b);

/// e.g. "2[G/C2] - [G/e]"
std::string to_orbit_string(const BurnsideElement& a);
/// e.g. "marks: (0, 2)"
std::string to_marks_string(const BurnsideElement& a);

}  // namespace gsk
