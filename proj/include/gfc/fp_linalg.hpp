#pragma once

#include <cstdint>
#include <vector>

// Dense linear algebra over the prime field F_p. Entries are kept in 0..p-1.
namespace gfc::fp {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

int mod(long long a, int p);
int inverse(int a, int p);

// Reduced row echelon form; zero rows are dropped.
Mat rref(Mat m, int p);
int rank(const Mat& m, int p);

// Basis of {x : m x = 0} in F_p^ncols, one vector per free column, in RREF order.
Mat nullspace(const Mat& m, int ncols, int p);

// rows must already be in RREF (as returned by rref).
bool in_row_space(const Mat& rref_rows, const Vec& v, int p);

Vec add(const Vec& a, const Vec& b, int p);
Vec scale(const Vec& a, int c, int p);
int dot(const Vec& a, const Vec& b, int p);

bool is_prime(long long p);
std::int64_t ipow(std::int64_t b, int e);

}  // namespace gfc::fp
