#include "gfc/free_action.hpp"

#include "gfc/errors.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace gfc {

std::vector<int> partition_label(int p, int r, int k) {
    std::vector<int> u(r, 0);
    for (int i = r - 1; i >= 0; --i) {
        u[i] = k % p;
        k /= p;
    }
    return u;
}

namespace {

int label_index(int p, const std::vector<int>& u) {
    int k = 0;
    for (int x : u) k = k * p + x;
    return k;
}

// Kernel of the map F_p^{n+1} -> F_p^r given by the r x (n+1) column matrix A.
Subgroup kernel_of_columns(const CurveType& ct, const fp::Mat& A) {
    const int n = ct.n();
    fp::Mat head;
    for (const auto& row : A) head.emplace_back(row.begin(), row.begin() + n);
    fp::Mat ns = fp::nullspace(head, n, ct.p());
    for (auto& v : ns) v.push_back(0);
    if (ns.empty()) return Subgroup::from_rows(ct, {std::vector<int>(n + 1, 0)});
    return Subgroup::from_rows(ct, ns);
}

void check_rank(const CurveType& ct, int m) {
    if (m < 1 || m > ct.n() - 1)
        throw DomainError("rank m must satisfy 1 <= m <= n-1");
}

}  // namespace

bool is_admissible(const AdmissiblePartition& P) {
    const int p = P.ct.p(), n = P.ct.n(), r = P.r;
    if (r < 1 || r > n - 1) throw MalformedPartition("r must satisfy 1 <= r <= n-1");
    const std::int64_t labels = fp::ipow(p, r) - 1;
    if (static_cast<std::int64_t>(P.parts.size()) != labels)
        throw MalformedPartition("partition must have p^r - 1 parts");
    std::vector<int> seen(n + 2, 0);
    for (const auto& part : P.parts)
        for (int j : part) {
            if (j < 1 || j > n + 1) throw MalformedPartition("index out of range");
            if (seen[j]++) throw MalformedPartition("parts overlap at index " + std::to_string(j));
        }
    for (int j = 1; j <= n + 1; ++j)
        if (!seen[j]) throw MalformedPartition("index " + std::to_string(j) + " not covered");

    std::vector<int> sum(r, 0);
    fp::Mat used;
    for (std::size_t k = 0; k < P.parts.size(); ++k) {
        if (P.parts[k].empty()) continue;
        auto u = partition_label(p, r, static_cast<int>(k + 1));
        sum = fp::add(sum, fp::scale(u, static_cast<int>(P.parts[k].size()), p), p);
        used.push_back(u);
    }
    const bool product_one = std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
    return product_one && fp::rank(used, p) == r;
}

Subgroup kernel_of_partition(const AdmissiblePartition& P) {
    if (!is_admissible(P)) throw DomainError("partition is not admissible");
    const int n = P.ct.n();
    fp::Mat A(P.r, std::vector<int>(n + 1, 0));
    for (std::size_t k = 0; k < P.parts.size(); ++k) {
        auto u = partition_label(P.ct.p(), P.r, static_cast<int>(k + 1));
        for (int j : P.parts[k])
            for (int i = 0; i < P.r; ++i) A[i][j - 1] = u[i];
    }
    return kernel_of_columns(P.ct, A);
}

std::vector<std::vector<int>> quotient_images(const Subgroup& K) {
    const CurveType& ct = K.curve_type();
    const int p = ct.p(), n = ct.n();
    fp::Mat rows;
    for (const auto& b : K.basis()) rows.emplace_back(b.begin(), b.begin() + n);
    fp::Mat L = rows.empty() ? fp::Mat{} : fp::nullspace(rows, n, p);
    if (rows.empty())
        for (int i = 0; i < n; ++i) {
            L.emplace_back(n, 0);
            L.back()[i] = 1;
        }
    const int r = static_cast<int>(L.size());
    std::vector<std::vector<int>> img(n + 1, std::vector<int>(r, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) img[j][i] = L[i][j];
    for (int i = 0; i < r; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += L[i][j];
        img[n][i] = fp::mod(-s, p);
    }
    return img;
}

AdmissiblePartition partition_of(const Subgroup& K) {
    if (auto w = K.fixed_point_witness())
        throw NotFreeError("subgroup " + K.words() + " contains " + w->word() + " which has fixed points",
                           w->exponents());
    const CurveType& ct = K.curve_type();
    const int r = ct.n() - K.rank();
    auto img = quotient_images(K);
    AdmissiblePartition P{ct, r, std::vector<std::vector<int>>(fp::ipow(ct.p(), r) - 1)};
    for (int j = 0; j <= ct.n(); ++j) P.parts[label_index(ct.p(), img[j]) - 1].push_back(j + 1);
    return P;
}

std::vector<int> partition_shape(const Subgroup& K) {
    auto P = partition_of(K);
    std::vector<int> shape;
    for (const auto& part : P.parts)
        if (!part.empty()) shape.push_back(static_cast<int>(part.size()));
    std::sort(shape.rbegin(), shape.rend());
    return shape;
}

namespace {

struct PivotBlock {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free_cells;  // (row, col)
    std::int64_t offset;
    std::int64_t count;
};

// One block per pivot set; a zero column before the first pivot is never allowed.
std::vector<PivotBlock> pivot_blocks(int p, int r, int cols) {
    std::vector<PivotBlock> blocks;
    std::vector<int> piv(r);
    std::int64_t offset = 0;
    // combinations of {1..cols-1} of size r-1, first pivot fixed at column 0
    std::vector<bool> pick(cols - 1, false);
    std::fill(pick.begin(), pick.begin() + (r - 1), true);
    do {
        piv[0] = 0;
        int t = 1;
        for (int c = 0; c < cols - 1; ++c)
            if (pick[c]) piv[t++] = c + 1;
        PivotBlock b{piv, {}, offset, 1};
        std::vector<bool> is_piv(cols, false);
        for (int c : piv) is_piv[c] = true;
        for (int i = 0; i < r; ++i)
            for (int c = piv[i] + 1; c < cols; ++c)
                if (!is_piv[c]) b.free_cells.emplace_back(i, c);
        if (b.free_cells.size() > 62) throw ResourceLimit("echelon enumeration too large");
        b.count = fp::ipow(p, static_cast<int>(b.free_cells.size()));
        if (offset > kEnumerationCap) throw ResourceLimit("echelon enumeration exceeds cap");
        offset += b.count;
        blocks.push_back(std::move(b));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (offset > kEnumerationCap) throw ResourceLimit("echelon enumeration exceeds cap");
    return blocks;
}

// Decode echelon matrix number idx of block b; returns true if it is an admissible rho.
bool decode(const PivotBlock& b, int p, int cols, std::int64_t idx, fp::Mat& A) {
    const int r = static_cast<int>(b.pivots.size());
    for (auto& row : A) std::fill(row.begin(), row.end(), 0);
    for (int i = 0; i < r; ++i) A[i][b.pivots[i]] = 1;
    for (const auto& [i, c] : b.free_cells) {
        A[i][c] = static_cast<int>(idx % p);
        idx /= p;
    }
    for (int c = 0; c < cols; ++c) {
        bool nz = false;
        for (int i = 0; i < r && !nz; ++i) nz = A[i][c] != 0;
        if (!nz) return false;
    }
    for (int i = 0; i < r; ++i) {
        long long s = std::accumulate(A[i].begin(), A[i].end(), 0LL);
        if (s % p != 0) return false;
    }
    return true;
}

std::int64_t block_of(const std::vector<PivotBlock>& blocks, std::int64_t g) {
    auto it = std::upper_bound(blocks.begin(), blocks.end(), g,
                               [](std::int64_t v, const PivotBlock& b) { return v < b.offset; });
    return (it - blocks.begin()) - 1;
}

std::vector<Subgroup> finish(std::vector<Subgroup> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Subgroup> echelon_kernels(const CurveType& ct, int m, bool parallel) {
    check_rank(ct, m);
    const int p = ct.p(), cols = ct.n() + 1, r = ct.n() - m;
    auto blocks = pivot_blocks(p, r, cols);
    const std::int64_t total = blocks.back().offset + blocks.back().count;

    std::vector<std::vector<Subgroup>> per_thread(parallel ? omp_get_max_threads() : 1);
#pragma omp parallel if (parallel)
    {
        auto& local = per_thread[parallel ? omp_get_thread_num() : 0];
        fp::Mat A(r, std::vector<int>(cols, 0));
#pragma omp for schedule(dynamic, 4096)
        for (std::int64_t g = 0; g < total; ++g) {
            const auto& b = blocks[block_of(blocks, g)];
            if (decode(b, p, cols, g - b.offset, A)) local.push_back(kernel_of_columns(ct, A));
        }
    }
    std::vector<Subgroup> all;
    for (auto& v : per_thread) all.insert(all.end(), v.begin(), v.end());
    return finish(std::move(all));
}

}  // namespace

std::vector<Subgroup> enumerate_free_subgroups(const CurveType& ct, int m) {
    return echelon_kernels(ct, m, true);
}

std::vector<Subgroup> enumerate_free_subgroups_serial(const CurveType& ct, int m) {
    return echelon_kernels(ct, m, false);
}

std::vector<Subgroup> enumerate_free_subgroups_by_assignment(const CurveType& ct, int m) {
    check_rank(ct, m);
    const int p = ct.p(), n = ct.n(), r = n - m;
    const std::int64_t labels = fp::ipow(p, r) - 1;
    std::int64_t total = 1;
    for (int j = 0; j <= n; ++j) {
        if (total > kEnumerationCap / labels) throw ResourceLimit("assignment enumeration exceeds 1e8");
        total *= labels;
    }
    std::vector<std::vector<int>> u(labels + 1);
    for (int k = 1; k <= labels; ++k) u[k] = partition_label(p, r, k);

    std::vector<Subgroup> out;
    fp::Mat A(r, std::vector<int>(n + 1, 0));
    std::vector<int> assign(n + 1);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t t = idx;
        for (int j = 0; j <= n; ++j) {
            assign[j] = static_cast<int>(t % labels) + 1;
            t /= labels;
        }
        AdmissiblePartition P{ct, r, std::vector<std::vector<int>>(labels)};
        for (int j = 0; j <= n; ++j) P.parts[assign[j] - 1].push_back(j + 1);
        if (!is_admissible(P)) continue;
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < r; ++i) A[i][j] = u[assign[j]][i];
        out.push_back(kernel_of_columns(ct, A));
    }
    return finish(std::move(out));
}

bool is_free_oracle(const Subgroup& K, std::int64_t limit) {
    for (const auto& h : K.elements(limit))
        if (!h.is_identity() && has_fixed_points(h)) return false;
    return true;
}

std::int64_t quotient_genus(const CurveType& ct, int m) {
    if (m < 0 || m > ct.n()) throw DomainError("rank out of range");
    const std::int64_t g = genus_fermat(ct);
    const std::int64_t d = fp::ipow(ct.p(), m);
    if ((g - 1) % d != 0) throw DomainError("no unramified quotient of this degree");
    return 1 + (g - 1) / d;
}

std::set<int> allowed_hyperelliptic_ranks(const CurveType& ct) {
    if (ct.p() != 2 || ct.n() < 4) throw DomainError("defined for p = 2 and n >= 4");
    const int n = ct.n();
    if (n % 2) return {n - 3, n - 2, n - 1};
    return {n - 3, n - 2};
}

}  // namespace gfc
