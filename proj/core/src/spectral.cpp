#include "specgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace specgraph {

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Randic: return "randic";
        case MatrixKind::NormalizedLaplacian: return "normalized-laplacian";
    }
    return "?";
}

MatrixKind matrix_kind_from_string(const std::string& name) {
    if (name == "adjacency") return MatrixKind::Adjacency;
    if (name == "randic") return MatrixKind::Randic;
    if (name == "normalized-laplacian" || name == "nl") return MatrixKind::NormalizedLaplacian;
    throw std::invalid_argument("unknown matrix kind '" + name + "'");
}

DenseSymMatrix matrix(const Graph& g, MatrixKind kind) {
    const int p = g.order();
    if (p < 1) throw EmptyGraphError("matrix requires a non-empty graph");
    DenseSymMatrix m(p);
    if (kind == MatrixKind::Adjacency) {
        for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
        return m;
    }
    const auto deg = g.degrees();
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d == 0; })) {
        throw IsolatedVertexError(to_string(kind) + " matrix needs every degree positive");
    }
    for (const auto& [u, v] : g.edges()) {
        m.set(u, v, 1.0 / std::sqrt(static_cast<double>(deg[u]) * deg[v]));
    }
    if (kind == MatrixKind::NormalizedLaplacian) {
        for (int i = 0; i < p; ++i) m.set(i, i, 1.0);
        for (const auto& [u, v] : g.edges()) m.set(u, v, -m(u, v));
    }
    return m;
}

Spectrum spectrum(const Graph& g, MatrixKind kind, double solver_tol, double group_tol) {
    auto eigs = sym_eigenvalues(matrix(g, kind), solver_tol);
    return group_multiplicities(eigs, group_tol);
}

EnergyReport energy(const Graph& g, MatrixKind kind, double solver_tol, double group_tol) {
    Spectrum s = spectrum(g, kind, solver_tol, group_tol);
    return {kind, s.energy(), std::move(s)};
}

namespace {

// (scale, multiplicity applied to every base eigenvalue)
using FactorTable = std::vector<std::pair<double, int>>;

FactorTable factor_table(const OperationKind& op, MatrixKind kind) {
    const int m = op.m;
    const double dm = m;
    if (kind == MatrixKind::NormalizedLaplacian) {
        throw std::invalid_argument("no closed-form predictor for the normalized Laplacian; "
                                    "use the Randic prediction and mu = 1 - rho");
    }
    const bool adjacency = (kind == MatrixKind::Adjacency);
    const int min_m = theorem_min_m(op.tag, kind);
    if (m < min_m) {
        throw MOutOfTheoremRangeError(op.id() + ": " + to_string(kind) +
                                      " closed form stated for m >= " + std::to_string(min_m));
    }
    switch (op.tag) {
        case OpTag::Splitting: {
            if (adjacency) {
                const double r = std::sqrt(1.0 + 4.0 * dm);
                return {{(1.0 + r) / 2.0, 1}, {(1.0 - r) / 2.0, 1}, {0.0, m - 1}};
            }
            return {{1.0, 1}, {-dm / (dm + 1.0), 1}, {0.0, m - 1}};
        }
        case OpTag::Shadow: {
            if (adjacency) return {{dm, 1}, {0.0, m - 1}};
            return {{1.0, 1}, {0.0, m - 1}};
        }
        case OpTag::DuplicateIter: {
            if (m > 30) {
                throw std::invalid_argument("duplicate predictor: 2^m multiplicities overflow "
                                            "for m > 30");
            }
            const int half = 1 << (m - 1);
            return {{1.0, half}, {-1.0, half}};
        }
        case OpTag::H1: {
            if (adjacency) {
                const double r = std::sqrt(dm * dm + 2.0 * dm - 7.0);
                return {{(dm - 1.0 + r) / 2.0, 1},
                        {(dm - 1.0 - r) / 2.0, 1},
                        {-1.0, 1},
                        {0.0, m - 3}};
            }
            return {{1.0, 1},
                    {-1.0 / (dm - 1.0), 1},
                    {-(dm - 2.0) / (dm * (dm - 1.0)), 1},
                    {0.0, m - 3}};
        }
        case OpTag::H2: {
            if (adjacency) {
                const double r = std::sqrt(dm - 1.0);
                return {{1.0 + r, 1}, {1.0 - r, 1}, {1.0, m - 2}};
            }
            return {{1.0, 1}, {-(dm - 2.0) / (2.0 * dm), 1}, {0.5, m - 2}};
        }
        case OpTag::H3: {
            if (adjacency) {
                const double r = std::sqrt(4.0 * dm - 3.0);
                return {{(1.0 + r) / 2.0, 1}, {(1.0 - r) / 2.0, 1}, {1.0, m - 2}};
            }
            return {{1.0, 1}, {-0.5, 1}, {0.5, m - 2}};
        }
    }
    throw std::invalid_argument("unknown operation tag");
}

} // namespace

int theorem_min_m(OpTag tag, MatrixKind kind) {
    const bool adjacency = (kind == MatrixKind::Adjacency);
    switch (tag) {
        case OpTag::Splitting: return 1;
        case OpTag::Shadow: return adjacency ? 1 : 2;
        case OpTag::DuplicateIter: return 1;
        case OpTag::H1: return 4;
        case OpTag::H2: return adjacency ? 2 : 4;
        case OpTag::H3: return adjacency ? 2 : 3;
    }
    return 1;
}

Spectrum predict_spectrum(const Spectrum& base, int p, const OperationKind& op,
                          MatrixKind kind, double group_tol) {
    if (base.total_multiplicity() != p) {
        throw std::invalid_argument("base spectrum multiplicities must sum to p");
    }
    const FactorTable table = factor_table(op, kind);
    std::vector<double> values;
    values.reserve(static_cast<size_t>(op.output_order(p)));
    for (const auto& [scale, mult] : table) {
        for (const auto& g : base.groups()) {
            values.insert(values.end(), static_cast<size_t>(mult) * g.multiplicity,
                          scale * g.value);
        }
    }
    std::sort(values.begin(), values.end());
    return group_multiplicities(values, group_tol);
}

double predict_energy(double base_energy, int p, const OperationKind& op, MatrixKind kind) {
    if (p < 1) throw std::invalid_argument("base order must be positive");
    double scale = 0.0;
    for (const auto& [factor, mult] : factor_table(op, kind)) {
        scale += mult * std::abs(factor);
    }
    return scale * base_energy;
}

} // namespace specgraph
