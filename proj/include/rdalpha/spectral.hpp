#pragma once

#include <complex>
#include <vector>

#include "rdalpha/matrix.hpp"

namespace rdalpha {

/// Default clustering width when turning raw eigenvalues into a multiset:
/// exact repeated roots split by roundoff get re-merged at this scale.
constexpr double kCoalesceTol = 1e-7;
/// Default tolerance when comparing two spectra.
constexpr double kMatchTol = 1e-8;
/// Jacobi stop: max off-diagonal below this times the Frobenius norm.
constexpr double kJacobiTol = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

struct SpectrumEntry {
    double value = 0.0;
    int multiplicity = 0;
};

/// Multiset of real eigenvalues, kept sorted descending with multiplicities
/// coalesced within a tolerance.
class Spectrum {
public:
    Spectrum() = default;

    static Spectrum from_values(std::vector<double> values,
                                double coalesce_tol = kCoalesceTol);
    static Spectrum from_entries(const std::vector<SpectrumEntry>& entries,
                                 double coalesce_tol = kCoalesceTol);

    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int total_multiplicity() const;
    /// Sum of value * multiplicity; equals the matrix trace for a complete
    /// spectrum.
    double sum() const;
    /// Multiplicity-expanded values, descending.
    std::vector<double> expanded() const;

private:
    std::vector<SpectrumEntry> entries_;
};

struct MatchReport {
    bool equal = false;
    double max_deviation = 0.0;
    std::vector<double> unmatched_a;
    std::vector<double> unmatched_b;
};

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations, iterated
/// until the largest off-diagonal entry drops below tol * ||m||_F, then the
/// diagonal is read off. Throws NoConvergenceError if the sweep budget runs
/// out first.
Spectrum sym_eigenvalues(const SymMatrix& m, double tol = kJacobiTol,
                         int max_sweeps = kJacobiMaxSweeps);

/// Raw diagonal from the same Jacobi iteration, uncoalesced.
std::vector<double> jacobi_eigenvalues(const SymMatrix& m,
                                       double tol = kJacobiTol,
                                       int max_sweeps = kJacobiMaxSweeps);

/// Eigenvalues of a dense real k x k matrix: balance, Householder reduction
/// to Hessenberg form, then Francis double-shift QR.
std::vector<std::complex<double>> real_matrix_eigenvalues(std::vector<double> a,
                                                          int k);

/// Eigenvalues of a quotient matrix. When q.equitable is set the spectrum
/// must be real: any imaginary part above tol raises ComplexSpectrumError.
/// Real parts are returned either way.
Spectrum general_eigenvalues(const QuotientMatrix& q, double tol = kMatchTol);

/// Greedy multiset comparison: with equal totals, the descending expansions
/// are paired element-wise; otherwise pairs within tol are matched greedily
/// and the leftovers reported.
MatchReport spectra_equal(const Spectrum& a, const Spectrum& b,
                          double tol = kMatchTol);

Spectrum spectrum_union(const std::vector<Spectrum>& spectra,
                        double coalesce_tol = kCoalesceTol);

} // namespace rdalpha
