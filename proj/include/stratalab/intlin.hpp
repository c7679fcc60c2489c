#pragma once

// Exact integer linear algebra on small dense matrices: products, rank,
// determinant (Bareiss) and Smith normal form.  Everything here works over
// the integers; sizes never exceed the rank of the largest root system (8),
// so long long is ample.

#include <vector>

namespace stratalab {

using Vec = std::vector<int>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    static Mat identity(int n);

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_sub(const Mat& x, const Mat& y);

// Rank over Q via fraction-free elimination.
int mat_rank(Mat m);

// Determinant of a square matrix (Bareiss).
long long mat_det(Mat m);

// Diagonal of the Smith normal form (nonnegative, each dividing the next).
std::vector<long long> smith_diagonal(Mat m);

// Order of the torsion subgroup of Z^cols / (row span of m):
// the product of the nonzero Smith invariant factors.
long long lattice_torsion_order(const Mat& m);

} // namespace stratalab
