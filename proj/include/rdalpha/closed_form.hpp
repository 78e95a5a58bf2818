#pragma once

#include <string>
#include <vector>

#include "rdalpha/groups.hpp"
#include "rdalpha/matrix.hpp"
#include "rdalpha/spectral.hpp"

namespace rdalpha {

/// One closed-form eigenvalue family, already evaluated at alpha.
struct ExplicitFamily {
    double value = 0.0;
    int multiplicity = 0;
    std::string provenance; // which block family produced it
};

/// Cross-check of a candidate closed-form expression (or matrix entry)
/// against the structurally derived value. candidate is NaN when the
/// expression cannot be evaluated at all.
struct PrintedDeviation {
    std::string label;
    double candidate = 0.0;
    double derived = 0.0;
    double abs_dev = 0.0;
};

/// A group power graph's RD_alpha spectrum in closed form: explicit families
/// plus a small quotient matrix whose roots complete the multiset.
struct ClosedFormSpectrum {
    std::vector<ExplicitFamily> explicit_part;
    QuotientMatrix quotient;
    std::vector<PrintedDeviation> printed_deviations;

    /// Sum of explicit multiplicities plus the quotient dimension; equals the
    /// group order.
    int total_dimension() const;
    Spectrum assemble(double coalesce_tol = kCoalesceTol) const;
};

ClosedFormSpectrum cyclic_spectrum(int n, double alpha);
ClosedFormSpectrum dihedral_spectrum(int n, double alpha);
ClosedFormSpectrum quaternion_spectrum(int n, double alpha);
ClosedFormSpectrum elementary_abelian_spectrum(int p, int k, double alpha);
ClosedFormSpectrum nonabelian_pq_spectrum(int p, int q, double alpha);

ClosedFormSpectrum closed_form_spectrum(const GroupSpec& spec, double alpha);

} // namespace rdalpha
