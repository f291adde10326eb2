#pragma once

#include "gfc/fermat_group.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace gfc {

// u_k in Z_p^r, k = 1..p^r-1: the base-p digits of k, first coordinate most significant.
std::vector<int> partition_label(int p, int r, int k);

// Tuple (I_1,...,I_{p^r-1}) of disjoint subsets of {1..n+1} (1-based indices).
struct AdmissiblePartition {
    CurveType ct;
    int r;
    std::vector<std::vector<int>> parts;
};

// Conditions (i) and (ii). Throws MalformedPartition on overlap or missing indices.
bool is_admissible(const AdmissiblePartition& P);

// ker rho_{r,P}. Throws DomainError if P is not admissible.
Subgroup kernel_of_partition(const AdmissiblePartition& P);

// Images rho(a_1..a_{n+1}) of a free K, read off the invariant lattice, and the
// resulting partition (labels in partition_label order).
std::vector<std::vector<int>> quotient_images(const Subgroup& K);
AdmissiblePartition partition_of(const Subgroup& K);

// Sizes of the nonempty classes {j : rho(a_j) = u}, sorted descending.
std::vector<int> partition_shape(const Subgroup& K);

inline constexpr std::int64_t kEnumerationCap = 100000000;

// All free subgroups of rank m, sorted. Parallel over echelon forms of rho.
std::vector<Subgroup> enumerate_free_subgroups(const CurveType& ct, int m);
// Same kernel on one thread.
std::vector<Subgroup> enumerate_free_subgroups_serial(const CurveType& ct, int m);
// Literal route over all assignments {1..n+1} -> {u_k}; capped at kEnumerationCap.
std::vector<Subgroup> enumerate_free_subgroups_by_assignment(const CurveType& ct, int m);

// Exhaustive check of every element of K.
bool is_free_oracle(const Subgroup& K, std::int64_t limit = 1000000);

std::int64_t quotient_genus(const CurveType& ct, int m);

std::set<int> allowed_hyperelliptic_ranks(const CurveType& ct);

}  // namespace gfc
