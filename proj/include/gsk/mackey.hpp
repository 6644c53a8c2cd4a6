#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsk/burnside.hpp"
#include "gsk/gcw.hpp"
#include "gsk/span.hpp"

namespace gsk {

using IntMatrix = Matrix<std::int64_t>;

/// Restriction, transfer and conjugation maps between the values of a Mackey
/// functor on every subgroup of G. Matrices act on column vectors of
/// coordinates, so a map A(H) -> A(K) has rank(K) rows and rank(H) columns.
struct MackeyData {
  GroupPtr group;
  std::vector<Subgroup> subgroups;  // lattice order
  std::vector<int> rank;
  std::map<std::pair<int, int>, IntMatrix> res;  // (h, k), K <= H: A(H) -> A(K)
  std::map<std::pair<int, int>, IntMatrix> tr;   // (h, k), K <= H: A(K) -> A(H)
  std::vector<std::vector<IntMatrix>> conj;      // [g][h]: A(H) -> A(gHg^-1)

  int index_of(const Subgroup& H) const;
  const IntMatrix& restriction(const Subgroup& H, const Subgroup& K) const;
  const IntMatrix& transfer(const Subgroup& K, const Subgroup& H) const;
  const IntMatrix& conjugation(Element g, const Subgroup& H) const;
};

/// Value at G/H is Burn(H). Each map is computed by transporting the G-set
/// G x_H (H/L) over G/H along the corresponding structural span and reading
/// off the fiber over the identity coset.
MackeyData burnside_mackey(const GroupPtr& G);
/// Same data from restrict_action / induce / conjugate_action directly.
MackeyData burnside_mackey_direct(const GroupPtr& G);

struct MackeyCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // first failure, empty on success
};

struct DoubleCosetReport {
  int k = 0;  // subgroup indices in MackeyData order
  int h = 0;
  bool pass = false;
  IntMatrix lhs;
  IntMatrix rhs;
};

/// res^G_K tr^G_H against the sum over K\G/H of tr c_g res.
DoubleCosetReport verify_double_coset(const MackeyData& M, const Subgroup& K, const Subgroup& H);
/// Unit laws, transitivity of res and tr, c_h = id for h in H, c_g c_g' = c_gg',
/// and compatibility of conjugation with res and tr.
std::vector<MackeyCheck> verify_mackey_axioms(const MackeyData& M);

/// Fiber Euler characteristic over one point of the base, in Burn(Stab).
struct FiberChi {
  int base_point = 0;
  BurnsideElement chi;
};

struct ChiTransportReport {
  std::vector<FiberChi> before;     // one per orbit of the source base
  std::vector<FiberChi> after;      // one per orbit of the target base
  std::vector<FiberChi> predicted;  // from res, tr and c_g applied to `before`
  bool agrees = false;
};

/// Transports M along s and compares fiber invariants with the Mackey prediction.
ChiTransportReport sk_transport(const MackeyData& data, const Span& s, const LabeledGCW& M);
/// Fiber invariants at the minimal point of each base orbit.
std::vector<FiberChi> fiber_chis(const LabeledGCW& M);

}  // namespace gsk
