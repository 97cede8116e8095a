#include "hv/linalg.hpp"

namespace hv {

std::vector<int> rref(ScalarMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Scalar inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

std::vector<ScalarVector> null_space(ScalarMatrix m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<ScalarVector> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        ScalarVector v(cols, Scalar(0));
        v[free_col] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hv
