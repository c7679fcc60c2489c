#include "stratalab/intlin.hpp"

#include <cassert>
#include <cstdlib>

namespace stratalab {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    assert(m.cols == static_cast<int>(v.size()));
    Vec r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        long long s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        r[i] = static_cast<int>(s);
    }
    return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

int mat_rank(Mat m) {
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        // fraction-free update (Bareiss): stays integral, no overflow at our sizes
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

long long mat_det(Mat m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::vector<long long> smith_diagonal(Mat m) {
    int r = m.rows, c = m.cols;
    int t = 0;
    std::vector<long long> diag;
    while (t < r && t < c) {
        // pick the entry of minimal nonzero absolute value in the trailing block
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                long long v = std::llabs(m.at(i, j));
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break; // trailing block is zero
        for (int j = 0; j < c; ++j) std::swap(m.at(pi, j), m.at(t, j));
        for (int i = 0; i < r; ++i) std::swap(m.at(i, pj), m.at(i, t));

        bool clean = true;
        for (int i = t + 1; i < r; ++i) {
            long long q = m.at(i, t) / m.at(t, t);
            if (q != 0)
                for (int j = t; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < c; ++j) {
            long long q = m.at(t, j) / m.at(t, t);
            if (q != 0)
                for (int i = t; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // remainder left somewhere, repeat with smaller pivot

        // divisibility fix-up: pivot must divide everything below-right
        bool fixed = true;
        for (int i = t + 1; i < r && fixed; ++i)
            for (int j = t + 1; j < c && fixed; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = 0; jj < c; ++jj) m.at(t, jj) += m.at(i, jj);
                    fixed = false;
                }
        if (!fixed) continue;

        diag.push_back(std::llabs(m.at(t, t)));
        ++t;
    }
    while (static_cast<int>(diag.size()) < std::min(r, c)) diag.push_back(0);
    return diag;
}

long long lattice_torsion_order(const Mat& m) {
    long long order = 1;
    for (long long d : smith_diagonal(m))
        if (d != 0) order *= d;
    return order;
}

} // namespace stratalab
