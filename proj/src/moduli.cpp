#include "gfc/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gfc {

Permutation perm_identity(int N) {
    Permutation s(N);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

Permutation perm_compose(const Permutation& s, const Permutation& t) {
    Permutation r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[t[i] - 1];
    return r;
}

Permutation perm_inverse(const Permutation& s) {
    Permutation r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[s[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

Permutation perm_cycle(int N, const std::vector<int>& cycle) {
    Permutation s = perm_identity(N);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (a < 1 || a > N || b < 1 || b > N) throw DomainError("cycle entry out of range");
        s[a - 1] = b;
    }
    return s;
}

std::int64_t factorial(int N) {
    std::int64_t f = 1;
    for (int i = 2; i <= N; ++i) f *= i;
    return f;
}

Permutation perm_unrank(int N, std::int64_t idx) {
    std::vector<int> pool = perm_identity(N);
    Permutation s;
    for (int k = N; k >= 1; --k) {
        std::int64_t f = factorial(k - 1);
        auto q = idx / f;
        idx %= f;
        s.push_back(pool[q]);
        pool.erase(pool.begin() + q);
    }
    return s;
}

std::string perm_cycles(const Permutation& s) {
    std::ostringstream os;
    std::vector<bool> seen(s.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i] || s[i] == static_cast<int>(i) + 1) continue;
        any = true;
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ',';
            first = false;
            os << j + 1;
            j = s[j] - 1;
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

template <class T>
void validate_lambda(const std::vector<T>& lambda) {
    using Tr = ScalarTraits<T>;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (Tr::near(lambda[i], T(0)) || Tr::near(lambda[i], T(1)))
            throw DomainError("lambda_" + std::to_string(i + 1) + " must avoid 0 and 1");
        for (std::size_t j = 0; j < i; ++j)
            if (Tr::near(lambda[i], lambda[j])) throw DomainError("lambda values must be pairwise distinct");
    }
}

template <class T>
std::vector<SpherePoint<T>> cone_points(const std::vector<T>& lambda) {
    validate_lambda(lambda);
    std::vector<SpherePoint<T>> pts{SpherePoint<T>::infinity(), SpherePoint<T>(T(0)), SpherePoint<T>(T(1))};
    for (const auto& l : lambda) pts.emplace_back(l);
    return pts;
}

template <class T>
std::vector<T> map_t(const std::vector<T>& lambda) {
    validate_lambda(lambda);
    if (lambda.empty()) return {};
    const T& last = lambda.back();
    std::vector<T> out{last / (last - T(1))};
    for (std::size_t j = 0; j + 1 < lambda.size(); ++j) out.push_back(last / (last - lambda[j]));
    return out;
}

template <class T>
std::vector<T> map_b(const std::vector<T>& lambda) {
    validate_lambda(lambda);
    std::vector<T> out;
    for (const auto& l : lambda) out.push_back(T(1) / l);
    return out;
}

namespace {

template <class T>
std::vector<T> theta_unchecked(const Permutation& sigma, const std::vector<SpherePoint<T>>& pts) {
    const Permutation inv = perm_inverse(sigma);
    auto M = Moebius<T>::from_three_points(pts[inv[0] - 1], pts[inv[1] - 1], pts[inv[2] - 1]);
    std::vector<T> out;
    for (std::size_t j = 3; j < pts.size(); ++j) out.push_back(M(pts[inv[j] - 1]).value());
    return out;
}

template <class T>
bool tuple_near(const std::vector<T>& a, const std::vector<T>& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!ScalarTraits<T>::near(a[i], b[i], tol)) return false;
    return true;
}

template <class T>
OrbitMatch orbit_scan(const std::vector<T>& lambda, const std::vector<T>& delta, double tol, bool parallel) {
    if (lambda.size() != delta.size()) throw DomainError("tuples of different length");
    const int N = static_cast<int>(lambda.size()) + 3;
    if (N - 1 > kOrbitMaxN) throw ResourceLimit("orbit scan limited to n <= 8");
    validate_lambda(delta);
    const auto pts = cone_points(lambda);
    const std::int64_t total = factorial(N);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best) if (parallel)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        if (idx >= best) continue;
        if (tuple_near(theta_unchecked(perm_unrank(N, idx), pts), delta, tol)) best = idx;
    }
    OrbitMatch m;
    if (best != std::numeric_limits<std::int64_t>::max()) {
        m.equivalent = true;
        m.witness = perm_unrank(N, best);
    }
    return m;
}

}  // namespace

template <class T>
std::vector<T> theta(const Permutation& sigma, const std::vector<T>& lambda) {
    const auto pts = cone_points(lambda);
    if (sigma.size() != pts.size()) throw DomainError("permutation must act on n+1 points");
    Permutation check = sigma;
    std::sort(check.begin(), check.end());
    if (check != perm_identity(static_cast<int>(sigma.size()))) throw DomainError("not a permutation");
    return theta_unchecked(sigma, pts);
}

template <class T>
OrbitMatch same_orbit(const std::vector<T>& lambda, const std::vector<T>& delta, double tol) {
    return orbit_scan(lambda, delta, tol, true);
}

template <class T>
OrbitMatch same_orbit_serial(const std::vector<T>& lambda, const std::vector<T>& delta, double tol) {
    return orbit_scan(lambda, delta, tol, false);
}

namespace {

template <class T>
std::vector<std::vector<T>> all_images(const std::vector<T>& lambda) {
    const int N = static_cast<int>(lambda.size()) + 3;
    if (N - 1 > kOrbitMaxN) throw ResourceLimit("orbit enumeration limited to n <= 8");
    const auto pts = cone_points(lambda);
    const std::int64_t total = factorial(N);
    std::vector<std::vector<T>> img(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) img[idx] = theta_unchecked(perm_unrank(N, idx), pts);
    return img;
}

}  // namespace

template <>
std::int64_t orbit_size<Rational>(const std::vector<Rational>& lambda) {
    return static_cast<std::int64_t>(orbit_by_theta(lambda).size());
}

template <>
std::int64_t orbit_size<Complex>(const std::vector<Complex>& lambda) {
    auto img = all_images(lambda);
    // cluster by rounding to a 1e-7 relative grid, then confirm within the cell neighbourhood
    std::map<std::vector<long long>, std::vector<std::size_t>> cells;
    std::vector<std::vector<Complex>> reps;
    auto key = [](const std::vector<Complex>& v) {
        std::vector<long long> k;
        for (const auto& z : v) {
            double s = 1e-7 * std::max(1.0, std::abs(z));
            k.push_back(std::llround(z.real() / s));
            k.push_back(std::llround(z.imag() / s));
        }
        return k;
    };
    for (auto& v : img) {
        auto k = key(v);
        auto& cell = cells[k];
        bool found = false;
        for (auto r : cell)
            if (tuple_near(reps[r], v, 1e-9)) found = true;
        if (!found) {
            cell.push_back(reps.size());
            reps.push_back(v);
        }
    }
    return static_cast<std::int64_t>(reps.size());
}

std::vector<std::vector<Rational>> orbit_by_theta(const std::vector<Rational>& lambda) {
    auto img = all_images(lambda);
    std::set<std::vector<Rational>> s(img.begin(), img.end());
    return {s.begin(), s.end()};
}

std::vector<std::vector<Rational>> orbit_by_generators(const std::vector<Rational>& lambda) {
    std::set<std::vector<Rational>> seen{lambda};
    std::deque<std::vector<Rational>> queue{lambda};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : {map_t(v), map_b(v)})
            if (seen.insert(w).second) queue.push_back(w);
    }
    return {seen.begin(), seen.end()};
}

#define GFC_INSTANTIATE(T)                                                                          \
    template void validate_lambda<T>(const std::vector<T>&);                                         \
    template std::vector<SpherePoint<T>> cone_points<T>(const std::vector<T>&);                      \
    template std::vector<T> map_t<T>(const std::vector<T>&);                                         \
    template std::vector<T> map_b<T>(const std::vector<T>&);                                         \
    template std::vector<T> theta<T>(const Permutation&, const std::vector<T>&);                     \
    template OrbitMatch same_orbit<T>(const std::vector<T>&, const std::vector<T>&, double);         \
    template OrbitMatch same_orbit_serial<T>(const std::vector<T>&, const std::vector<T>&, double);

GFC_INSTANTIATE(Complex)
GFC_INSTANTIATE(Rational)

}  // namespace gfc
