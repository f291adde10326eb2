#include "gfc/quotient_equations.hpp"

#include "gfc/free_action.hpp"
#include "gfc/moduli.hpp"

#include <algorithm>

namespace gfc {

fp::Mat affine_representation(const Subgroup& K) {
    const int n = K.curve_type().n();
    fp::Mat rows;
    for (const auto& b : K.basis()) rows.emplace_back(b.begin(), b.begin() + n);
    return rows;
}

std::vector<std::vector<int>> invariant_lattice_basis(const Subgroup& K) {
    const int n = K.curve_type().n();
    auto rows = affine_representation(K);
    fp::Mat L;
    if (rows.empty()) {
        for (int i = 0; i < n; ++i) {
            L.emplace_back(n, 0);
            L.back()[i] = 1;
        }
    } else {
        L = fp::nullspace(rows, n, K.curve_type().p());
    }
    std::sort(L.begin(), L.end());
    return L;
}

std::vector<LinearSlope> t_slopes(const std::vector<Complex>& lambda) {
    const std::size_t n = lambda.size() + 2;
    const Complex last = lambda.empty() ? Complex(1.0) : lambda.back();
    std::vector<LinearSlope> s{{0.0, 1.0}, {-1.0, -last}};
    if (n >= 3) s.push_back({1.0, last - 1.0});
    for (std::size_t j = 4; j <= n; ++j) s.push_back({1.0, last - lambda[j - 4]});
    return s;
}

CyclicGonalModel cyclic_gonal_model(const Subgroup& K, const std::vector<Complex>& lambda, bool with_pair_sums) {
    const CurveType& ct = K.curve_type();
    if (static_cast<int>(lambda.size()) != ct.n() - 2)
        throw DomainError("expected " + std::to_string(ct.n() - 2) + " lambda values");
    validate_lambda(lambda);
    if (auto w = K.fixed_point_witness())
        throw NotFreeError("subgroup contains " + w->word() + " which has fixed points", w->exponents());

    CyclicGonalModel model;
    model.p = ct.p();
    model.slopes = t_slopes(lambda);
    model.subgroup_rows = affine_representation(K);
    auto L = invariant_lattice_basis(K);
    for (const auto& l : L) model.equations.push_back({l});
    if (with_pair_sums) {
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t b = a + 1; b < L.size(); ++b) {
                auto v = fp::add(L[a], L[b], ct.p());
                if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
                GonalEquation e{v};
                if (std::find(model.equations.begin(), model.equations.end(), e) == model.equations.end())
                    model.equations.push_back(e);
            }
    }
    return model;
}

}  // namespace gfc
