#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsk/group.hpp"

namespace gsk::catalogue {

GroupPtr cyclic(int n);
/// Dihedral group of order 2n.
GroupPtr dihedral(int n);
GroupPtr symmetric(int n);
GroupPtr alternating(int n);
GroupPtr quaternion8();
/// C3 semidirect C4 with the generator of C4 inverting C3 (order 12).
GroupPtr dicyclic12();
/// Pairs (a, b) with componentwise multiplication, indexed a * |B| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Looks up names such as "C6", "C2xC2", "S3", "D4", "Q8", "A4", "Dic3".
GroupPtr by_name(const std::string& name);

/// One representative of every isomorphism class of groups of order <= 12.
std::vector<std::pair<std::string, GroupPtr>> groups_up_to_order_12();

}  // namespace gsk::catalogue
