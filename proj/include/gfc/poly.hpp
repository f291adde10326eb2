#pragma once

#include "gfc/sphere.hpp"

#include <vector>

namespace gfc {

// Coefficients in ascending powers of x.
using Poly = std::vector<Complex>;

Poly poly_from_roots(const std::vector<Complex>& roots);
Poly poly_mul(const Poly& a, const Poly& b);
Complex poly_eval(const Poly& f, const Complex& x);
// Divide by the leading coefficient; trailing zeros are dropped first.
Poly poly_monic(Poly f);
// f(c x)
Poly poly_scale_arg(const Poly& f, const Complex& c);
int poly_degree(const Poly& f);

// Principal k-th root times exp(2 pi i j / k)
Complex root_of(const Complex& z, int k, int j = 0);

}  // namespace gfc
