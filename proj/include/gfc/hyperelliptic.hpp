#pragma once

#include "gfc/fermat_group.hpp"
#include "gfc/poly.hpp"
#include "gfc/sphere.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfc {

enum class CaseLabel { Case1, Case2, Case3, Case4, Case5i, Case5ii, NotHyperelliptic, Unknown };

std::string to_string(CaseLabel c);
CaseLabel case_label_from_string(const std::string& s);

// y^2 = prod over finite roots (x - r); an infinite root drops its factor.
struct HyperellipticCurve {
    int genus = 0;
    std::vector<SpherePointC> roots;

    Poly polynomial() const;
    bool has_infinite_root() const;
    bool operator==(const HyperellipticCurve&) const = default;
};

// Map from the x-line of the curve down to the base sphere, with its deck group.
struct QuotientMap {
    enum class Kind { Identity, Even, Klein, Case3, Cyclic };
    Kind kind = Kind::Identity;

    // Even: the omitted pair (b1, b2)
    SpherePointC b1, b2;
    // Klein: T sends the three remaining cone points to inf, 0, 1; the map is T^-1 o U
    std::optional<MoebiusC> T;
    // Case3: x -> alpha (x^2 + x^-2) + beta
    Complex alpha, beta;
    // Cyclic: x -> x^p
    int p = 1;

    SpherePointC operator()(const SpherePointC& x) const;
    std::vector<MoebiusC> deck() const;
};

struct HyperellipticConstruction {
    CaseLabel label = CaseLabel::Unknown;
    HyperellipticCurve curve;
    QuotientMap cover;
    // Points of the base sphere the roots must map to, with the expected fiber sizes.
    std::vector<std::pair<SpherePointC, int>> targets;
    // Case3: a^2, b^2 and the normalized (lambda1', lambda2', lambda3')
    Complex a2, b2;
    std::vector<Complex> normalized_lambda;
};

enum class KleinOrientation { Forward, Inverse };
enum class Case3Constant { Halved, Unhalved };

HyperellipticConstruction curve_case1(const CurveType& ct, const std::vector<Complex>& lambda);

// kept: n-1 indices; the other two, ascending, become (b1, b2) unless omitted is given.
HyperellipticConstruction curve_case2(const CurveType& ct, const std::vector<Complex>& lambda,
                                      const std::vector<int>& kept,
                                      std::optional<std::pair<int, int>> omitted = std::nullopt);

// Three pairs of indices; the first two pairs are normalized to {inf,0} and {1,lambda1'}.
HyperellipticConstruction curve_case3(const CurveType& ct, const std::vector<Complex>& lambda,
                                      const std::vector<std::pair<int, int>>& pairs = {{1, 2}, {3, 4}, {5, 6}},
                                      Case3Constant constant = Case3Constant::Halved);

// alpha, beta of the degree-4 map for normalized (lambda1, lambda2, lambda3)
std::pair<Complex, Complex> case3_coefficients(const Complex& l1, const Complex& l2, const Complex& l3,
                                               Case3Constant constant = Case3Constant::Halved);
// Images of x = 1, i, 0 under that map
std::vector<SpherePointC> case3_branch_values(const Complex& l1, const Complex& l2, const Complex& l3,
                                              Case3Constant constant = Case3Constant::Halved);

// big: n-2 indices; remaining three (ascending unless given) define T.
HyperellipticConstruction curve_case4(const CurveType& ct, const std::vector<Complex>& lambda,
                                      const std::vector<int>& big,
                                      std::optional<std::vector<int>> remaining = std::nullopt,
                                      KleinOrientation orientation = KleinOrientation::Forward);

// n = 2: y^2 = x^p - 1. n = 3: y^2 = (x^p - 1)(x^p - alpha^p) with lambda1 from lambda[0].
HyperellipticConstruction curve_case5(const CurveType& ct, const std::vector<Complex>& lambda);

CaseLabel classify(const Subgroup& K, const std::vector<Complex>& lambda);

struct Classification {
    CaseLabel label = CaseLabel::Unknown;
    std::optional<HyperellipticConstruction> construction;
};

Classification classify_and_build(const Subgroup& K, const std::vector<Complex>& lambda);

struct Z2n1Split {
    std::vector<Subgroup> hyperelliptic;
    std::vector<Subgroup> non_hyperelliptic;
};

Z2n1Split hyperelliptic_z2n1_subgroups(const CurveType& ct);

// The (2,4) tables.
struct HumbertGenus3 {
    int index;  // 1..10, big parts in lexicographic order
    Subgroup L;
    std::pair<int, int> big;
    std::vector<int> remaining;
    std::pair<Complex, Complex> ab;
    HyperellipticConstruction construction;
};

struct HumbertGenus2 {
    int index;    // 1..10, big parts in lexicographic order
    int c_index;  // 1..10, omitted pairs in lexicographic order
    Subgroup K;
    std::pair<int, int> omitted;
    HyperellipticConstruction construction;
    // y^2 = prod (x^2 + c_k) in the coordinate where Q(z) = (b1 z^2 + b2)/(z^2 + 1)
    std::vector<Complex> c;
    HyperellipticCurve normalized;
};

struct HumbertContainment {
    int k_index;
    std::vector<int> l_indices;
    std::vector<HyperellipticConstruction> covers;  // one per L, remaining = (b1, b2, b3)
};

struct HumbertReport {
    std::vector<Complex> lambda;
    std::vector<HumbertGenus3> genus3;
    std::vector<HumbertGenus2> genus2;
    std::vector<HumbertContainment> containment;
};

HumbertReport humbert_demo(const Complex& lambda1, const Complex& lambda2);

}  // namespace gfc
