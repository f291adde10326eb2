#include "gfc/poly.hpp"

#include <numbers>

namespace gfc {

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_from_roots(const std::vector<Complex>& roots) {
    Poly f{Complex(1.0)};
    for (const auto& z : roots) f = poly_mul(f, Poly{-z, Complex(1.0)});
    return f;
}

Complex poly_eval(const Poly& f, const Complex& x) {
    Complex acc(0.0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != Complex(0.0)) return i;
    return -1;
}

Poly poly_monic(Poly f) {
    int d = poly_degree(f);
    if (d < 0) throw DomainError("zero polynomial");
    f.resize(d + 1);
    const Complex lead = f[d];
    for (auto& c : f) c /= lead;
    return f;
}

Poly poly_scale_arg(const Poly& f, const Complex& c) {
    Poly r(f.size());
    Complex pw(1.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] * pw;
        pw *= c;
    }
    return r;
}

Complex root_of(const Complex& z, int k, int j) {
    const double two_pi = 2.0 * std::numbers::pi;
    return std::pow(z, 1.0 / k) * std::polar(1.0, two_pi * j / k);
}

}  // namespace gfc
