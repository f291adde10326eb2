#pragma once

#include "gfc/sphere.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

// sigma[i-1] = sigma(i) on {1..N}. Composition (s*t)(i) = s(t(i)).
using Permutation = std::vector<int>;

Permutation perm_identity(int N);
Permutation perm_compose(const Permutation& s, const Permutation& t);
Permutation perm_inverse(const Permutation& s);
Permutation perm_cycle(int N, const std::vector<int>& cycle);
// idx-th permutation in lexicographic order, 0 <= idx < N!
Permutation perm_unrank(int N, std::int64_t idx);
std::string perm_cycles(const Permutation& s);
std::int64_t factorial(int N);

inline constexpr int kOrbitMaxN = 8;

// Lambda tuples (lambda_1..lambda_{n-2}); n is size()+2.
template <class T>
void validate_lambda(const std::vector<T>& lambda);

// p_1 = inf, p_2 = 0, p_3 = 1, p_{j+3} = lambda_j
template <class T>
std::vector<SpherePoint<T>> cone_points(const std::vector<T>& lambda);

template <class T>
std::vector<T> map_t(const std::vector<T>& lambda);
template <class T>
std::vector<T> map_b(const std::vector<T>& lambda);

// Normalize p_{sigma^-1(1)}, p_{sigma^-1(2)}, p_{sigma^-1(3)} to inf, 0, 1.
template <class T>
std::vector<T> theta(const Permutation& sigma, const std::vector<T>& lambda);

struct OrbitMatch {
    bool equivalent = false;
    std::optional<Permutation> witness;  // smallest in lexicographic order
};

template <class T>
OrbitMatch same_orbit(const std::vector<T>& lambda, const std::vector<T>& delta, double tol = 1e-9);
template <class T>
OrbitMatch same_orbit_serial(const std::vector<T>& lambda, const std::vector<T>& delta, double tol = 1e-9);

// Number of distinct theta images (exact for Rational, 1e-9 clustering for Complex).
template <class T>
std::int64_t orbit_size(const std::vector<T>& lambda);
template <>
std::int64_t orbit_size<Complex>(const std::vector<Complex>& lambda);
template <>
std::int64_t orbit_size<Rational>(const std::vector<Rational>& lambda);

// Closure of {lambda} under map_t and map_b.
std::vector<std::vector<Rational>> orbit_by_generators(const std::vector<Rational>& lambda);
std::vector<std::vector<Rational>> orbit_by_theta(const std::vector<Rational>& lambda);

}  // namespace gfc
