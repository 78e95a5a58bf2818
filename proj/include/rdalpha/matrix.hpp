#pragma once

#include <cstddef>
#include <vector>

namespace rdalpha {

/// Dense real symmetric matrix. Symmetry is structural: set() writes both
/// triangles and from_rows() rejects asymmetric input, so entries(i,j) and
/// entries(j,i) are always bit-identical.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    /// Builds from a row-major dense matrix; throws std::invalid_argument if
    /// any pair (i,j), (j,i) differs exactly.
    static SymMatrix from_rows(int n, const std::vector<double>& row_major);

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double value) {
        a_[idx(i, j)] = value;
        a_[idx(j, i)] = value;
    }

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    const std::vector<double>& data() const { return a_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<double> a_;
};

/// Quotient of a matrix over a vertex partition: entry (i,j) is the average
/// row sum of block (i,j). Generally not symmetric even when the source is.
struct QuotientMatrix {
    int k = 0;
    std::vector<double> entries; // row-major, k*k
    bool equitable = false;

    QuotientMatrix() = default;
    QuotientMatrix(int k_, std::vector<double> entries_, bool equitable_)
        : k(k_), entries(std::move(entries_)), equitable(equitable_) {}

    double operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * k + j];
    }
    double& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * k + j];
    }
};

} // namespace rdalpha
