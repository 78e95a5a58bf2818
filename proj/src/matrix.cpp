#include "rdalpha/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdalpha {

SymMatrix SymMatrix::from_rows(int n, const std::vector<double>& row_major) {
    if (static_cast<std::size_t>(n) * n != row_major.size()) {
        throw std::invalid_argument("SymMatrix::from_rows: size mismatch");
    }
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = row_major[static_cast<std::size_t>(i) * n + j];
            if (v != row_major[static_cast<std::size_t>(j) * n + i]) {
                throw std::invalid_argument("SymMatrix::from_rows: input is not symmetric");
            }
            m.a_[m.idx(i, j)] = v;
        }
    }
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

} // namespace rdalpha
