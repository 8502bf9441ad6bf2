#ifndef SPECGRAPH_INVARIANTS_HPP
#define SPECGRAPH_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/graph_ops.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

// ---- numeric (oracle) invariants -------------------------------------------

/// Kemeny's constant: sum of reciprocals of the p-1 largest normalized
/// Laplacian eigenvalues. The zero eigenvalue is excluded by index after a
/// structural BFS connectivity check, never by tolerance filtering.
/// Requires a connected graph on at least two vertices.
double kemeny(const Graph& g, double solver_tol = default_solver_tol);

/// Degree Kirchhoff index: 2q * kemeny(g), with q the edge count of g itself.
double degree_kirchhoff(const Graph& g, double solver_tol = default_solver_tol);

/// Spanning-tree count from the normalized Laplacian eigenvalue product
/// (prod of degrees * prod of nonzero eigenvalues / sum of degrees).
/// Floating-point; callers wanting the integer round it.
double spanning_trees(const Graph& g, double solver_tol = default_solver_tol);

/// True when every grouped eigenvalue of the adjacency (resp. Randic) matrix
/// lies within 1e-6 of an integer.
bool is_integral(const Graph& g, double solver_tol = default_solver_tol);
bool is_randic_integral(const Graph& g, double solver_tol = default_solver_tol);

/// Energy comparison at tolerance 1e-7. Equality of energy is necessary but
/// not sufficient for the textbook notion, which additionally demands
/// non-isomorphic graphs; isomorphism is never checked here and the report
/// says so explicitly.
struct EquienergeticReport {
    bool same_order;
    double energy_a;
    double energy_b;
    double diff;
    bool equal;                       // same_order && diff <= 1e-7
    bool isomorphism_checked = false; // always false
};
EquienergeticReport are_equienergetic(const Graph& a, const Graph& b, MatrixKind kind,
                                      double solver_tol = default_solver_tol);

/// Everything at once for one graph. Fields that need a structure the graph
/// does not have are null: Randic quantities need every degree positive,
/// kemeny/kirchhoff need a connected graph on p >= 2 vertices.
/// spanning_trees is total: 0 when disconnected, 1 for the one-vertex graph.
struct InvariantReport {
    int p = 0;
    long long q = 0;
    bool connected = false;
    double energy = 0.0;
    std::optional<double> randic_energy;
    std::optional<double> kemeny;
    std::optional<double> kirchhoff;
    double spanning_trees = 0.0;
    long long spanning_trees_nearest_int = 0;
    bool integral = false;
    std::optional<bool> randic_integral;
};
InvariantReport invariant_report(const Graph& g, double solver_tol = default_solver_tol,
                                 double group_tol = default_group_tol);

// ---- closed-form invariants -------------------------------------------------

/// Base-graph quantities the closed forms consume. Never includes anything
/// about a constructed graph, so closed-form and oracle verification arms
/// share no data beyond the base graph itself.
struct BaseGraphData {
    int p = 0;
    long long q = 0;
    std::vector<int> degrees;
    std::vector<double> randic_desc; // all p Randic eigenvalues, descending
    double kemeny = 0.0;
    double kirchhoff = 0.0;
    double trees = 0.0;
};
BaseGraphData base_graph_data(const Graph& g, double solver_tol = default_solver_tol);

enum class InvariantId { Kemeny, Kirchhoff, SpanningTrees };
enum class FormulaMode { AsPrinted, Corrected };

std::string to_string(InvariantId id);
std::string to_string(FormulaMode mode);

/// Closed-form Kemeny / degree-Kirchhoff / spanning-tree value of op(base).
///
/// AsPrinted evaluates each formula exactly as its source states it,
/// summation bounds and prefactors included, even where that provably
/// disagrees with the numeric oracle. Corrected evaluates the forms derived
/// from the operation's factor-structured Randic spectrum together with the
/// true degree and edge data of the construction; where nothing needed
/// fixing the two modes coincide. The differences, all confirmed against the
/// oracle: splitting Kemeny sums over every base eigenvalue (not from the
/// second) and its Kirchhoff prefactor uses the true edge count (2m+1)q;
/// h1 Kemeny's constant term is p(m-3) and its sums start at the first
/// eigenvalue; h2/h3 Kemeny need the (m-2)-fold multiplicity on the
/// half-factor sum and no stray constant; h3 Kemeny as printed carries a
/// Kirchhoff-shaped 6(m-1)q prefactor; the tree counts for h1/h2/h3 need
/// (m-1)^{2p} instead of (m-1)^2 and per-eigenvalue product powers matching
/// the factor multiplicities.
///
/// Stated ranges: splitting/shadow m >= 1, h1 m > 3, h2 m >= 2, h3 m > 2;
/// outside them MOutOfTheoremRangeError, and the duplicate operation has no
/// closed-form invariant at all (std::invalid_argument).
double closed_form_invariant(const BaseGraphData& base, const OperationKind& op,
                             InvariantId which, FormulaMode mode);

/// Smallest m for which the invariant closed forms of this operation apply.
int invariant_min_m(OpTag tag);
bool has_invariant_formulas(OpTag tag);

// ---- verification ledger ----------------------------------------------------

enum class Verdict { Match, Mismatch };
std::string to_string(Verdict v);

/// One comparison line: a closed-form prediction against the numeric oracle.
/// verdict is Match iff abs_diff <= max(match_tol, 1e-9 * |oracle|).
/// Spectrum rows compare whole multisets: closed_form/oracle then carry the
/// two energies and abs_diff the largest per-eigenvalue deviation (a huge
/// sentinel when the multiplicity patterns differ).
struct VerificationRecord {
    std::string formula_id;
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_diff = 0.0;
    Verdict verdict = Verdict::Mismatch;
    std::string note;
};

struct VerifyOptions {
    double solver_tol = default_solver_tol;
    double group_tol = default_group_tol;
    double match_tol = 1e-7;
    bool as_printed = true;
    bool corrected = true;
};

/// Per-eigenvalue multiset comparison of two grouped spectra.
struct SpectrumMatch {
    bool multiplicities_equal = false;
    double max_abs_diff = 0.0;
};
SpectrumMatch compare_spectra(const Spectrum& a, const Spectrum& b);

/// Runs every applicable check for each operation: predicted vs oracle
/// spectrum and energy for the adjacency and Randic matrices, then the three
/// invariant closed forms in the requested modes. Checks whose closed form is
/// not stated for the given (operation, matrix, m) are skipped. Requires a
/// connected base graph without isolated vertices. A failure inside one
/// record is captured in that record's note; the batch always completes.
/// Records are ordered by (position of op in ops, formula_id).
std::vector<VerificationRecord> verify_all(const Graph& g,
                                           const std::vector<OperationKind>& ops,
                                           const VerifyOptions& options = {});

} // namespace specgraph

#endif
