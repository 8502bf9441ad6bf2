#ifndef SPECGRAPH_SPECTRAL_HPP
#define SPECGRAPH_SPECTRAL_HPP

#include <string>

#include "specgraph/graph.hpp"
#include "specgraph/graph_ops.hpp"
#include "specgraph/linalg.hpp"

namespace specgraph {

enum class MatrixKind { Adjacency, Randic, NormalizedLaplacian };

std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& name);

/// Matrix carrier for a graph: adjacency (0/1), Randic (1/sqrt(d_i d_j) on
/// edges), or normalized Laplacian (identity minus Randic). The latter two
/// require a graph without isolated vertices; every kind requires p >= 1.
DenseSymMatrix matrix(const Graph& g, MatrixKind kind);

/// Numeric spectrum: eigensolve + multiplicity grouping. This is the oracle
/// side of every verification pair.
Spectrum spectrum(const Graph& g, MatrixKind kind,
                  double solver_tol = default_solver_tol,
                  double group_tol = default_group_tol);

struct EnergyReport {
    MatrixKind kind;
    double value; // sum of multiplicity * |eigenvalue|
    Spectrum spectrum;
};

EnergyReport energy(const Graph& g, MatrixKind kind,
                    double solver_tol = default_solver_tol,
                    double group_tol = default_group_tol);

/// Closed-form spectrum of op(G) from the spectrum of G alone: every output
/// eigenvalue is scale * base eigenvalue for a fixed factor multiset that
/// depends only on (op, kind). Never touches the constructed graph, so it is
/// independent of the numeric path it is checked against.
///
/// Factor tables (multiplicity per base eigenvalue in parentheses):
///   splitting  adjacency  (1±sqrt(1+4m))/2, 0 (m-1)
///   splitting  randic     1, -m/(m+1), 0 (m-1)
///   shadow     adjacency  m, 0 (m-1)
///   shadow     randic     1, 0 (m-1)            [stated for m > 1]
///   dup        both       +1 (2^{m-1}), -1 (2^{m-1})
///   h1         adjacency  (m-1±sqrt(m^2+2m-7))/2, -1, 0 (m-3)
///   h1         randic     1, -1/(m-1), -(m-2)/(m(m-1)), 0 (m-3)
///   h2         adjacency  1±sqrt(m-1), 1 (m-2)
///   h2         randic     1, -(m-2)/(2m), 1/2 (m-2)   [stated for m > 3]
///   h3         adjacency  (1±sqrt(4m-3))/2, 1 (m-2)
///   h3         randic     1, -1/2, 1/2 (m-2)          [stated for m > 2]
/// Throws MOutOfTheoremRangeError when m is outside the stated range.
Spectrum predict_spectrum(const Spectrum& base, int p, const OperationKind& op,
                          MatrixKind kind, double group_tol = default_group_tol);

/// Closed-form energy of op(G): a scalar multiple of the base energy
/// (the sum of |scale| * multiplicity over the factor table above).
double predict_energy(double base_energy, int p, const OperationKind& op,
                      MatrixKind kind);

/// Smallest m for which the (op, kind) closed forms are stated.
int theorem_min_m(OpTag tag, MatrixKind kind);

} // namespace specgraph

#endif
