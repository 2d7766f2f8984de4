#include "fuzzpolar/linalg.hpp"

#include <cassert>

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

Rational dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& t, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
    return r;
}

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Rational(0)); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Mat identity_mat(int n) {
    Mat m(static_cast<std::size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(dot(row, v));
    return r;
}

Mat mat_transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat bt = mat_transpose(b);
    Mat r(a.size(), Vec(bt.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
    return r;
}

namespace {

// Row-reduces m in place, returns pivot columns. Optional rhs is carried along.
std::vector<std::size_t> row_reduce(Mat& m, Vec* rhs) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Rational determinant(Mat m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

int rank(Mat m) { return static_cast<int>(row_reduce(m, nullptr).size()); }

std::optional<Vec> solve_linear(Mat a, Vec b) {
    if (a.empty()) {
        for (const auto& x : b)
            if (x != 0) return std::nullopt;
        return Vec{};
    }
    std::size_t cols = a[0].size();
    auto pivots = row_reduce(a, &b);
    // Consistency: zero rows must have zero rhs.
    for (std::size_t i = pivots.size(); i < a.size(); ++i)
        if (b[i] != 0) return std::nullopt;
    Vec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
    return x;
}

std::vector<Vec> null_space(Mat a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    auto pivots = row_reduce(a, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec primitive_integer_direction(const Vec& v) {
    Integer lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, den(x));
    Integer g = 0;
    Vec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer e = num(v[i]) * (lcm_den / den(v[i]));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(e));
        scaled[i] = Rational(e);
    }
    if (g == 0) return scaled;
    for (auto& x : scaled) x /= Rational(g);
    return scaled;
}

int compare_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

} // namespace fuzzpolar
