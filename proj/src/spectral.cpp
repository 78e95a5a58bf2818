#include "rdalpha/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "rdalpha/errors.hpp"

namespace rdalpha {

namespace {

double sign_of(double magnitude, double carrier) {
    return carrier >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

/// Parlett-Reinsch balancing: diagonal similarity by powers of 2 so that
/// row and column norms roughly agree. Eigenvalues are unchanged.
void balance(std::vector<double>& a, int n) {
    auto A = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(A(j, i));
                r += std::abs(A(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (int j = 0; j < n; ++j) A(i, j) *= g;
                for (int j = 0; j < n; ++j) A(j, i) *= f;
            }
        }
    }
}

/// Householder reduction to upper Hessenberg form, in place.
void hessenberg_reduce(std::vector<double>& a, int n) {
    auto A = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    std::vector<double> v(n, 0.0);
    for (int m = 0; m + 2 < n; ++m) {
        bool in_form = true;
        for (int i = m + 2; i < n; ++i) {
            if (A(i, m) != 0.0) {
                in_form = false;
                break;
            }
        }
        if (in_form) continue;
        double sigma2 = 0.0;
        for (int i = m + 1; i < n; ++i) sigma2 += A(i, m) * A(i, m);
        double sigma = std::sqrt(sigma2);
        double s = A(m + 1, m) >= 0.0 ? sigma : -sigma;
        for (int i = m + 1; i < n; ++i) v[i] = A(i, m);
        v[m + 1] += s;
        double vtv = sigma2 + 2.0 * s * A(m + 1, m) + s * s;
        if (vtv == 0.0) continue;
        double beta = 2.0 / vtv;
        // rows m+1..n-1 from the left
        for (int j = m; j < n; ++j) {
            double dot = 0.0;
            for (int i = m + 1; i < n; ++i) dot += v[i] * A(i, j);
            dot *= beta;
            for (int i = m + 1; i < n; ++i) A(i, j) -= dot * v[i];
        }
        // columns m+1..n-1 from the right
        for (int i = 0; i < n; ++i) {
            double dot = 0.0;
            for (int j = m + 1; j < n; ++j) dot += A(i, j) * v[j];
            dot *= beta;
            for (int j = m + 1; j < n; ++j) A(i, j) -= dot * v[j];
        }
        A(m + 1, m) = -s;
        for (int i = m + 2; i < n; ++i) A(i, m) = 0.0;
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix (EISPACK hqr).
std::vector<std::complex<double>> hessenberg_qr(std::vector<double>& a, int n) {
    auto A = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_its = 60;

    std::vector<std::complex<double>> out;
    out.reserve(n);

    double anorm = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(A(i, j));
    }

    int nn = n - 1;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, x = 0.0, y = 0.0, z = 0.0, w = 0.0, s = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                s = std::abs(A(l - 1, l - 1)) + std::abs(A(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(A(l, l - 1)) <= eps * s) {
                    A(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 0) l = 0;
            x = A(nn, nn);
            if (l == nn) {
                out.emplace_back(x + t, 0.0);
                --nn;
            } else {
                y = A(nn - 1, nn - 1);
                w = A(nn, nn - 1) * A(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        out.emplace_back(x + z, 0.0);
                        out.emplace_back(z != 0.0 ? x - w / z : x + z, 0.0);
                    } else {
                        out.emplace_back(x + p, z);
                        out.emplace_back(x + p, -z);
                    }
                    nn -= 2;
                } else {
                    if (its == max_its) {
                        throw NoConvergenceError(
                            "hessenberg_qr: too many QR iterations");
                    }
                    if (its == 10 || its == 20 || its == 30 || its == 40 ||
                        its == 50) {
                        t += x;
                        for (int i = 0; i <= nn; ++i) A(i, i) -= x;
                        s = std::abs(A(nn, nn - 1)) + std::abs(A(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    for (m = nn - 2; m >= l; --m) {
                        z = A(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / A(m + 1, m) + A(m, m + 1);
                        q = A(m + 1, m + 1) - z - r - s;
                        r = A(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        double u = std::abs(A(m, m - 1)) *
                                   (std::abs(q) + std::abs(r));
                        double v = std::abs(p) *
                                   (std::abs(A(m - 1, m - 1)) + std::abs(z) +
                                    std::abs(A(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        A(i, i - 2) = 0.0;
                        if (i != m + 2) A(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = A(k, k - 1);
                            q = A(k + 1, k - 1);
                            r = (k != nn - 1) ? A(k + 2, k - 1) : 0.0;
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) A(k, k - 1) = -A(k, k - 1);
                        } else {
                            A(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            double pp = A(k, j) + q * A(k + 1, j);
                            if (k != nn - 1) {
                                pp += r * A(k + 2, j);
                                A(k + 2, j) -= pp * z;
                            }
                            A(k + 1, j) -= pp * y;
                            A(k, j) -= pp * x;
                        }
                        int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            double pp = x * A(i, k) + y * A(i, k + 1);
                            if (k != nn - 1) {
                                pp += z * A(i, k + 2);
                                A(i, k + 2) -= pp * r;
                            }
                            A(i, k + 1) -= pp * q;
                            A(i, k) -= pp;
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    return out;
}

} // namespace

Spectrum Spectrum::from_values(std::vector<double> values, double coalesce_tol) {
    Spectrum s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end(), std::greater<double>());
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        while (j < values.size() && values[j - 1] - values[j] <= coalesce_tol) {
            ++j;
        }
        double mean = 0.0;
        for (std::size_t k = i; k < j; ++k) mean += values[k];
        mean /= static_cast<double>(j - i);
        s.entries_.push_back({mean, static_cast<int>(j - i)});
        i = j;
    }
    return s;
}

Spectrum Spectrum::from_entries(const std::vector<SpectrumEntry>& entries,
                                double coalesce_tol) {
    std::vector<double> values;
    for (const auto& e : entries) {
        if (e.multiplicity < 0) {
            throw std::invalid_argument("Spectrum: negative multiplicity");
        }
        for (int i = 0; i < e.multiplicity; ++i) values.push_back(e.value);
    }
    return from_values(std::move(values), coalesce_tol);
}

int Spectrum::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
}

double Spectrum::sum() const {
    double s = 0.0;
    for (const auto& e : entries_) s += e.value * e.multiplicity;
    return s;
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& e : entries_) {
        for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
    }
    return out;
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& m, double tol,
                                       int max_sweeps) {
    const int n = m.size();
    if (n == 0) return {};
    // Rutishauser's formulation: only the strict upper triangle is rotated,
    // diagonal corrections accumulate in z and fold into d once per sweep,
    // and entries negligible against both diagonals snap to exact zero.
    std::vector<double> a = m.data();
    auto A = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    std::vector<double> d(n), accum(n), z(n, 0.0);
    for (int i = 0; i < n; ++i) accum[i] = d[i] = A(i, i);
    const double fro = m.frobenius_norm();
    if (fro == 0.0) return d;
    const double thresh = tol * fro;
    for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
        double sm = 0.0, off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                sm += std::abs(A(p, q));
                off = std::max(off, std::abs(A(p, q)));
            }
        }
        if (sm == 0.0 || off < thresh) return d;
        if (sweep == max_sweeps) break;
        const double skip_below =
            sweep < 3 ? 0.2 * sm / (static_cast<double>(n) * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double g = 100.0 * std::abs(A(p, q));
                if (sweep > 3 && std::abs(d[p]) + g == std::abs(d[p]) &&
                    std::abs(d[q]) + g == std::abs(d[q])) {
                    A(p, q) = 0.0;
                    continue;
                }
                if (std::abs(A(p, q)) <= skip_below) continue;
                double h = d[q] - d[p];
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = A(p, q) / h;
                } else {
                    double theta = 0.5 * h / A(p, q);
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);
                h = t * A(p, q);
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                A(p, q) = 0.0;
                auto rotate = [&](double& x, double& y) {
                    double g0 = x, h0 = y;
                    x = g0 - s * (h0 + g0 * tau);
                    y = h0 + s * (g0 - h0 * tau);
                };
                for (int j = 0; j < p; ++j) rotate(A(j, p), A(j, q));
                for (int j = p + 1; j < q; ++j) rotate(A(p, j), A(j, q));
                for (int j = q + 1; j < n; ++j) rotate(A(p, j), A(q, j));
            }
        }
        for (int i = 0; i < n; ++i) {
            accum[i] += z[i];
            d[i] = accum[i];
            z[i] = 0.0;
        }
    }
    throw NoConvergenceError("jacobi_eigenvalues: sweep budget exhausted (" +
                             std::to_string(max_sweeps) + " sweeps)");
}

Spectrum sym_eigenvalues(const SymMatrix& m, double tol, int max_sweeps) {
    return Spectrum::from_values(jacobi_eigenvalues(m, tol, max_sweeps));
}

std::vector<std::complex<double>> real_matrix_eigenvalues(std::vector<double> a,
                                                          int k) {
    if (k < 0 || static_cast<std::size_t>(k) * k != a.size()) {
        throw std::invalid_argument("real_matrix_eigenvalues: size mismatch");
    }
    if (k == 0) return {};
    if (k == 1) return {{a[0], 0.0}};
    balance(a, k);
    hessenberg_reduce(a, k);
    return hessenberg_qr(a, k);
}

Spectrum general_eigenvalues(const QuotientMatrix& q, double tol) {
    if (q.k == 0) return Spectrum{};
    auto eigs = real_matrix_eigenvalues(q.entries, q.k);
    double max_imag = 0.0;
    std::vector<double> real_parts;
    real_parts.reserve(eigs.size());
    for (const auto& z : eigs) {
        max_imag = std::max(max_imag, std::abs(z.imag()));
        real_parts.push_back(z.real());
    }
    if (q.equitable && max_imag > tol) {
        throw ComplexSpectrumError(
            "general_eigenvalues: equitable quotient produced imaginary part " +
            std::to_string(max_imag));
    }
    return Spectrum::from_values(std::move(real_parts));
}

MatchReport spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    MatchReport report;
    const auto ea = a.expanded();
    const auto eb = b.expanded();
    if (ea.size() == eb.size()) {
        report.equal = true;
        for (std::size_t i = 0; i < ea.size(); ++i) {
            double dev = std::abs(ea[i] - eb[i]);
            report.max_deviation = std::max(report.max_deviation, dev);
            if (dev > tol) {
                report.equal = false;
                report.unmatched_a.push_back(ea[i]);
                report.unmatched_b.push_back(eb[i]);
            }
        }
        return report;
    }
    report.equal = false;
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        double dev = std::abs(ea[i] - eb[j]);
        if (dev <= tol) {
            report.max_deviation = std::max(report.max_deviation, dev);
            ++i;
            ++j;
        } else if (ea[i] > eb[j]) {
            report.unmatched_a.push_back(ea[i++]);
        } else {
            report.unmatched_b.push_back(eb[j++]);
        }
    }
    while (i < ea.size()) report.unmatched_a.push_back(ea[i++]);
    while (j < eb.size()) report.unmatched_b.push_back(eb[j++]);
    return report;
}

Spectrum spectrum_union(const std::vector<Spectrum>& spectra,
                        double coalesce_tol) {
    std::vector<double> values;
    for (const auto& s : spectra) {
        auto e = s.expanded();
        values.insert(values.end(), e.begin(), e.end());
    }
    return Spectrum::from_values(std::move(values), coalesce_tol);
}

} // namespace rdalpha
