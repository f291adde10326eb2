#include "gfc/fp_linalg.hpp"

#include "gfc/errors.hpp"

#include <algorithm>
#include <limits>

namespace gfc::fp {

int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inverse(int a, int p) {
    a = mod(a, p);
    if (a == 0) throw DomainError("zero has no inverse mod p");
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return mod(t, p);
}

Mat rref(Mat m, int p) {
    if (m.empty()) return m;
    const std::size_t ncols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && mod(m[piv][col], p) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        int inv = inverse(m[row][col], p);
        for (auto& x : m[row]) x = mod(1LL * x * inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row) continue;
            int f = mod(m[i][col], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j)
                m[i][j] = mod(m[i][j] - 1LL * f * m[row][j], p);
        }
        ++row;
    }
    m.resize(row);
    for (auto& r : m)
        for (auto& x : r) x = mod(x, p);
    return m;
}

int rank(const Mat& m, int p) { return static_cast<int>(rref(m, p).size()); }

Mat nullspace(const Mat& m, int ncols, int p) {
    Mat r = rref(m, p);
    std::vector<int> pivot_of_col(ncols, -1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto it = std::find_if(r[i].begin(), r[i].end(), [](int x) { return x != 0; });
        pivot_of_col[it - r[i].begin()] = static_cast<int>(i);
    }
    Mat basis;
    for (int f = 0; f < ncols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        Vec v(ncols, 0);
        v[f] = 1;
        for (int c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = mod(-r[pivot_of_col[c]][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const Mat& rref_rows, const Vec& v, int p) {
    Vec w = v;
    for (auto& x : w) x = mod(x, p);
    for (const auto& row : rref_rows) {
        auto it = std::find_if(row.begin(), row.end(), [](int x) { return x != 0; });
        std::size_t c = it - row.begin();
        int f = w[c];
        if (f == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = mod(w[j] - 1LL * f * row[j], p);
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b, int p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], p);
    return r;
}

Vec scale(const Vec& a, int c, int p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(1LL * a[i] * c, p);
    return r;
}

int dot(const Vec& a, const Vec& b, int p) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += 1LL * a[i] * b[i];
    return mod(s, p);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<std::int64_t>::max() / b)
            throw ResourceLimit("integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

}  // namespace gfc::fp
