#ifndef SPECGRAPH_LINALG_HPP
#define SPECGRAPH_LINALG_HPP

#include <span>
#include <vector>

#include "specgraph/errors.hpp"

namespace specgraph {

inline constexpr double default_solver_tol = 1e-11;
inline constexpr double default_group_tol = 1e-7;
inline constexpr int jacobi_max_sweeps = 100;

/// Order-n real symmetric matrix, row-major storage. Construction checks
/// symmetry (within 1e-12 relative to the largest entry) and rejects
/// non-finite values; set() writes both triangles so the invariant is
/// preserved under mutation.
class DenseSymMatrix {
public:
    explicit DenseSymMatrix(int n);
    static DenseSymMatrix from_rows(int n, std::vector<double> row_major);
    static DenseSymMatrix identity(int n);

    int order() const { return n_; }
    double operator()(int i, int j) const { return values_[idx(i, j)]; }
    void set(int i, int j, double v) {
        values_[idx(i, j)] = v;
        values_[idx(j, i)] = v;
    }

    double trace() const;
    double frobenius_norm() const;
    double off_diagonal_norm() const;
    std::span<const double> values() const { return values_; }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
    int n_ = 0;
    std::vector<double> values_;
};

/// Multiset of real eigenvalues grouped by multiplicity; group values are
/// strictly increasing and separated by more than the grouping tolerance.
struct SpectrumGroup {
    double value;
    int multiplicity;
    bool operator==(const SpectrumGroup&) const = default;
};

class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<SpectrumGroup> groups) : groups_(std::move(groups)) {}

    const std::vector<SpectrumGroup>& groups() const { return groups_; }
    int total_multiplicity() const;
    bool empty() const { return groups_.empty(); }

    /// Sorted eigenvalue list with each value repeated by its multiplicity.
    std::vector<double> expand() const;
    /// Sum of multiplicity * |value|.
    double energy() const;
    double min_value() const;
    double max_value() const;

    bool operator==(const Spectrum&) const = default;

private:
    std::vector<SpectrumGroup> groups_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi (row-cyclic sweeps),
/// returned in non-decreasing order. Convergence target: off-diagonal
/// Frobenius norm <= tol * max(1, ||M||_F) within the sweep budget;
/// throws NoConvergenceError otherwise. Rotations preserve trace and
/// Frobenius norm, so sum / sum-of-squares checks against trace and
/// ||M||_F^2 hold to roundoff.
std::vector<double> sym_eigenvalues(const DenseSymMatrix& m,
                                    double tol = default_solver_tol,
                                    int max_sweeps = jacobi_max_sweeps);

/// Clusters a sorted eigenvalue list: a value joins the current group when it
/// lies within group_tol of the running group mean; the group value is the
/// mean of its members.
Spectrum group_multiplicities(std::span<const double> sorted_eigs,
                              double group_tol = default_group_tol);

/// Kronecker product: (a ⊗ b)[i*nb + k, j*nb + l] = a(i,j) * b(k,l).
DenseSymMatrix kron(const DenseSymMatrix& a, const DenseSymMatrix& b);

} // namespace specgraph

#endif
