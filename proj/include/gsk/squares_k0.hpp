#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsk/snf.hpp"

namespace gsk {

/// Objects, distinguished squares (A, B, C, D) and a basepoint; each square
/// imposes [A] + [D] = [B] + [C] and the basepoint imposes [O] = 0.
struct SquaresPresentation {
  std::vector<std::string> objects;
  std::string basepoint;
  std::vector<std::array<std::string, 4>> squares;
  /// Unordered pair (A, B) -> declared coproduct object X.
  std::map<std::pair<std::string, std::string>, std::string> coproducts;

  /// Throws UnknownObject for undeclared names and InvalidArgument for
  /// duplicate objects or a missing basepoint.
  void validate() const;
  int index_of(const std::string& name) const;
};

/// Z^rank + sum of Z/torsion_i. The class of each object is stored in
/// canonical coordinates: torsion coordinates first (least non-negative
/// residues) followed by the free coordinates.
struct FPAbelianGroup {
  int rank = 0;
  std::vector<BigInt> torsion;
  std::vector<std::string> objects;
  std::vector<std::vector<BigInt>> classes;
  BigMatrix relations;  // one row per square, then the basepoint row

  const std::vector<BigInt>& class_of(const std::string& name) const;
};

FPAbelianGroup present_k0(const SquaresPresentation& P);
/// Equality in canonical coordinates; throws UnknownObject.
bool classes_equal(const FPAbelianGroup& G, const std::string& a, const std::string& b);
/// "Z^2", "Z/2 + Z", "0"
std::string describe_group(const FPAbelianGroup& G);

struct StarReport {
  /// Squares demanded by declared coproduct witnesses but absent, e.g. "(O,A,B,X)".
  std::vector<std::string> missing_squares;
  /// Declared witness pairs lacking one of their two squares.
  std::vector<std::pair<std::string, std::string>> uncovered;
  /// Object pairs with no witness at all, declared or found among the squares.
  std::vector<std::pair<std::string, std::string>> unwitnessed;
  /// Condition (*) holds on the whole fragment.
  bool star_certified() const { return uncovered.empty() && unwitnessed.empty(); }
};

/// Pairs involving the basepoint are covered by the identity squares.
StarReport check_star(const SquaresPresentation& P);

struct InvariantReport {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Checks value(A) + value(D) = value(B) + value(C) on every square and
/// value(O) = 0. Missing objects or ragged vectors throw InvalidArgument.
InvariantReport validate_invariant(const SquaresPresentation& P,
                                   const std::map<std::string, std::vector<std::int64_t>>& assignment);

}  // namespace gsk
