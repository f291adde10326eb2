#pragma once

#include "gfc/fermat_group.hpp"
#include "gfc/sphere.hpp"

#include <vector>

namespace gfc {

// t_j(t1) = c0 + c1 * t1
struct LinearSlope {
    Complex c0;
    Complex c1;
    Complex operator()(const Complex& t1) const { return c0 + c1 * t1; }
    bool operator==(const LinearSlope&) const = default;
};

// s^p = prod_j t_j(t1)^{exponents[j]}
struct GonalEquation {
    std::vector<int> exponents;
    bool operator==(const GonalEquation&) const = default;
};

struct CyclicGonalModel {
    int p = 2;
    std::vector<LinearSlope> slopes;       // t_1..t_n
    std::vector<GonalEquation> equations;  // one per invariant monomial
    fp::Mat subgroup_rows;                 // affine rows of K, used by the verifier
    bool operator==(const CyclicGonalModel&) const = default;
};

fp::Mat affine_representation(const Subgroup& K);

// Null space mod p of the affine rows, entries in 0..p-1, sorted.
std::vector<std::vector<int>> invariant_lattice_basis(const Subgroup& K);

// Slopes of t_1..t_n in the chart x_{n+1} = 1.
std::vector<LinearSlope> t_slopes(const std::vector<Complex>& lambda);

// with_pair_sums also emits l_a + l_b mod p for every pair of basis vectors.
CyclicGonalModel cyclic_gonal_model(const Subgroup& K, const std::vector<Complex>& lambda,
                                    bool with_pair_sums = false);

}  // namespace gfc
