#include "specgraph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace specgraph {

DenseSymMatrix::DenseSymMatrix(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("matrix order must be non-negative");
    values_.assign(static_cast<size_t>(n) * n, 0.0);
}

DenseSymMatrix DenseSymMatrix::from_rows(int n, std::vector<double> row_major) {
    if (n < 0 || row_major.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("from_rows: need n*n values");
    }
    double max_abs = 0.0;
    for (double v : row_major) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("from_rows: non-finite entry");
        }
        max_abs = std::max(max_abs, std::abs(v));
    }
    const double sym_tol = 1e-12 * std::max(1.0, max_abs);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double a = row_major[static_cast<size_t>(i) * n + j];
            double b = row_major[static_cast<size_t>(j) * n + i];
            if (std::abs(a - b) > sym_tol) {
                throw std::invalid_argument("from_rows: matrix not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
            // store the symmetrized value so later arithmetic sees one number
            double v = 0.5 * (a + b);
            row_major[static_cast<size_t>(i) * n + j] = v;
            row_major[static_cast<size_t>(j) * n + i] = v;
        }
    }
    DenseSymMatrix m(n);
    m.values_ = std::move(row_major);
    return m;
}

DenseSymMatrix DenseSymMatrix::identity(int n) {
    DenseSymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

double DenseSymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double DenseSymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

double DenseSymMatrix::off_diagonal_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            double v = (*this)(i, j);
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

int Spectrum::total_multiplicity() const {
    int total = 0;
    for (const auto& g : groups_) total += g.multiplicity;
    return total;
}

std::vector<double> Spectrum::expand() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& g : groups_) out.insert(out.end(), g.multiplicity, g.value);
    return out;
}

double Spectrum::energy() const {
    double e = 0.0;
    for (const auto& g : groups_) e += g.multiplicity * std::abs(g.value);
    return e;
}

double Spectrum::min_value() const {
    if (groups_.empty()) throw std::invalid_argument("empty spectrum");
    return groups_.front().value;
}

double Spectrum::max_value() const {
    if (groups_.empty()) throw std::invalid_argument("empty spectrum");
    return groups_.back().value;
}

std::vector<double> sym_eigenvalues(const DenseSymMatrix& m, double tol, int max_sweeps) {
    if (tol <= 0.0) throw std::invalid_argument("solver tolerance must be positive");
    if (max_sweeps < 1) throw std::invalid_argument("sweep budget must be positive");
    const int n = m.order();
    if (n == 0) return {};
    if (n == 1) return {m(0, 0)};

    std::vector<double> a(m.values().begin(), m.values().end());
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    const double threshold = tol * std::max(1.0, m.frobenius_norm());
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    bool converged = off_norm() <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rotation angle from the standard stable formulas.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = at(p, p);
                const double aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(p, k) = at(k, p);
                    at(k, q) = s * akp + c * akq;
                    at(q, k) = at(k, q);
                }
            }
        }
        converged = off_norm() <= threshold;
    }
    if (!converged) {
        throw NoConvergenceError("jacobi: off-diagonal norm " + std::to_string(off_norm()) +
                                 " above threshold after " + std::to_string(max_sweeps) +
                                 " sweeps");
    }

    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = at(i, i);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

Spectrum group_multiplicities(std::span<const double> sorted_eigs, double group_tol) {
    if (group_tol <= 0.0) throw std::invalid_argument("group tolerance must be positive");
    std::vector<SpectrumGroup> groups;
    double sum = 0.0;
    int count = 0;
    for (double v : sorted_eigs) {
        if (count > 0 && std::abs(v - sum / count) <= group_tol) {
            sum += v;
            ++count;
        } else {
            if (count > 0) groups.push_back({sum / count, count});
            sum = v;
            count = 1;
        }
    }
    if (count > 0) groups.push_back({sum / count, count});
    return Spectrum(std::move(groups));
}

DenseSymMatrix kron(const DenseSymMatrix& a, const DenseSymMatrix& b) {
    const int na = a.order();
    const int nb = b.order();
    DenseSymMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) {
                    out.set(i * nb + k, j * nb + l, aij * b(k, l));
                }
        }
    return out;
}

} // namespace specgraph
