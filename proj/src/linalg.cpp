#include "sga/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sga {

namespace {

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        mpq_class inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::vector<QVec> nullspace(const QMat& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    QMat a = m;
    std::vector<int> pivots = rref(a);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<QVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(cols, 0);
        v[free_c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = i < a.size() ? -a[i][free_c] : mpq_class(0);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_int(std::vector<std::vector<long>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    size_t r = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace sga
