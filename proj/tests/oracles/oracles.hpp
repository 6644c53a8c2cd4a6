#pragma once

// Brute-force references used by the unit and acceptance suites. Nothing here
// calls the library algorithms it is meant to check; only the raw group table
// and raw action tables are read.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gsk/gset.hpp"

namespace oracle {

using Mask = std::uint32_t;

/// Every subgroup as a bitmask over element indices, by testing all subsets.
std::vector<Mask> subgroups_by_subsets(const gsk::FiniteGroup& G);
bool conjugate_masks(const gsk::FiniteGroup& G, Mask a, Mask b);
/// One mask per conjugacy class, in the first-seen order of `subgroups`.
std::vector<std::vector<Mask>> conjugacy_classes(const gsk::FiniteGroup& G, const std::vector<Mask>& subgroups);

/// |(G/H)^K| by looping over cosets as explicit element sets.
std::int64_t mark(const gsk::FiniteGroup& G, Mask H, Mask K);

/// Coefficients of a G-set in the basis {G/H_i} for the given class
/// representatives, by finding each orbit's stabilizer and searching for a
/// conjugating element.
std::vector<std::int64_t> orbit_decomposition(const gsk::GSet& X, const std::vector<Mask>& reps);

/// Orbit count of the diagonal action on G/H x G/K, sorted into classes.
std::vector<std::int64_t> product_of_cosets(const gsk::FiniteGroup& G, Mask H, Mask K, const std::vector<Mask>& reps);

/// Invariant factors (including zeros, length min(rows, cols)) computed by
/// Hermite row reduction followed by gcd elimination; no transforms.
std::vector<mpz_class> invariant_factors(std::vector<std::vector<mpz_class>> A);
/// Whether v lies in the integer row space of A.
bool in_row_space(std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> v);
/// Determinant by cofactor-free Gaussian elimination over the rationals.
mpq_class determinant(const std::vector<std::vector<mpz_class>>& A);

}  // namespace oracle
