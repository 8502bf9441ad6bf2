#include "specgraph/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specgraph {

namespace {

constexpr double mismatch_sentinel = 1e300;

void require_connected_for(const Graph& g, const char* what) {
    if (!g.is_connected()) {
        throw DisconnectedError(std::string(what) + " requires a connected graph");
    }
    if (g.order() < 2) {
        throw DisconnectedError(std::string(what) + " requires at least two vertices");
    }
}

/// Ascending normalized Laplacian eigenvalues with the single structural zero
/// removed (by index, after the BFS connectivity check).
std::vector<double> positive_nl_eigenvalues(const Graph& g, double solver_tol) {
    auto eigs = sym_eigenvalues(matrix(g, MatrixKind::NormalizedLaplacian), solver_tol);
    eigs.erase(eigs.begin());
    return eigs;
}

} // namespace

double kemeny(const Graph& g, double solver_tol) {
    require_connected_for(g, "kemeny");
    double k = 0.0;
    for (double mu : positive_nl_eigenvalues(g, solver_tol)) k += 1.0 / mu;
    return k;
}

double degree_kirchhoff(const Graph& g, double solver_tol) {
    return 2.0 * g.size() * kemeny(g, solver_tol);
}

double spanning_trees(const Graph& g, double solver_tol) {
    require_connected_for(g, "spanning_trees");
    double product = 1.0;
    for (int d : g.degrees()) product *= d;
    for (double mu : positive_nl_eigenvalues(g, solver_tol)) product *= mu;
    return product / (2.0 * g.size());
}

namespace {

bool spectrum_is_integral(const Spectrum& s) {
    for (const auto& grp : s.groups()) {
        if (std::abs(grp.value - std::round(grp.value)) > 1e-6) return false;
    }
    return true;
}

} // namespace

bool is_integral(const Graph& g, double solver_tol) {
    return spectrum_is_integral(spectrum(g, MatrixKind::Adjacency, solver_tol));
}

bool is_randic_integral(const Graph& g, double solver_tol) {
    return spectrum_is_integral(spectrum(g, MatrixKind::Randic, solver_tol));
}

EquienergeticReport are_equienergetic(const Graph& a, const Graph& b, MatrixKind kind,
                                      double solver_tol) {
    EquienergeticReport rep{};
    rep.same_order = (a.order() == b.order());
    rep.energy_a = energy(a, kind, solver_tol).value;
    rep.energy_b = energy(b, kind, solver_tol).value;
    rep.diff = std::abs(rep.energy_a - rep.energy_b);
    rep.equal = rep.same_order && rep.diff <= 1e-7;
    return rep;
}

InvariantReport invariant_report(const Graph& g, double solver_tol, double group_tol) {
    InvariantReport rep;
    rep.p = g.order();
    rep.q = g.size();
    rep.connected = g.is_connected();
    rep.energy = energy(g, MatrixKind::Adjacency, solver_tol, group_tol).value;
    rep.integral = is_integral(g, solver_tol);
    if (!g.has_isolated_vertex()) {
        rep.randic_energy = energy(g, MatrixKind::Randic, solver_tol, group_tol).value;
        rep.randic_integral = is_randic_integral(g, solver_tol);
    }
    if (rep.connected && rep.p >= 2) {
        rep.kemeny = kemeny(g, solver_tol);
        rep.kirchhoff = degree_kirchhoff(g, solver_tol);
        rep.spanning_trees = spanning_trees(g, solver_tol);
    } else if (rep.connected) {
        rep.spanning_trees = 1.0; // single vertex
    } else {
        rep.spanning_trees = 0.0;
    }
    rep.spanning_trees_nearest_int = static_cast<long long>(std::llround(rep.spanning_trees));
    return rep;
}

BaseGraphData base_graph_data(const Graph& g, double solver_tol) {
    require_connected_for(g, "closed-form invariants");
    BaseGraphData base;
    base.p = g.order();
    base.q = g.size();
    base.degrees = g.degrees();
    base.randic_desc = sym_eigenvalues(matrix(g, MatrixKind::Randic), solver_tol);
    std::reverse(base.randic_desc.begin(), base.randic_desc.end());
    base.kemeny = kemeny(g, solver_tol);
    base.kirchhoff = degree_kirchhoff(g, solver_tol);
    base.trees = spanning_trees(g, solver_tol);
    return base;
}

std::string to_string(InvariantId id) {
    switch (id) {
        case InvariantId::Kemeny: return "kemeny";
        case InvariantId::Kirchhoff: return "kirchhoff";
        case InvariantId::SpanningTrees: return "spanning-trees";
    }
    return "?";
}

std::string to_string(FormulaMode mode) {
    return mode == FormulaMode::AsPrinted ? "as_printed" : "corrected";
}

int invariant_min_m(OpTag tag) {
    switch (tag) {
        case OpTag::Splitting: return 1;
        case OpTag::Shadow: return 1;
        case OpTag::H1: return 4;
        case OpTag::H2: return 2;
        case OpTag::H3: return 3;
        case OpTag::DuplicateIter: return std::numeric_limits<int>::max();
    }
    return std::numeric_limits<int>::max();
}

bool has_invariant_formulas(OpTag tag) { return tag != OpTag::DuplicateIter; }

namespace {

// Sums/products of f(rho) over the base Randic eigenvalues. from_first
// includes the leading eigenvalue rho_1 (= 1 for a connected base);
// the printed forms often start at the second.
template <typename F>
double eig_sum(const BaseGraphData& base, bool from_first, F f) {
    double s = 0.0;
    for (size_t i = from_first ? 0 : 1; i < base.randic_desc.size(); ++i) {
        s += f(base.randic_desc[i]);
    }
    return s;
}

template <typename F>
double eig_prod(const BaseGraphData& base, F f) {
    double s = 1.0;
    for (double rho : base.randic_desc) s *= f(rho);
    return s;
}

double degree_product_pow(const BaseGraphData& base, int exponent) {
    double prod = 1.0;
    for (int d : base.degrees) prod *= d;
    return std::pow(prod, exponent);
}

double splitting_kemeny(const BaseGraphData& base, int m, bool from_first) {
    const double dm = m;
    return base.p * (dm - 1.0) + base.kemeny +
           eig_sum(base, from_first,
                   [&](double rho) { return (dm + 1.0) / (1.0 + dm * (1.0 + rho)); });
}

double h1_sums(const BaseGraphData& base, int m, bool from_first) {
    const double dm = m;
    return eig_sum(base, from_first, [&](double rho) { return (dm - 1.0) / (dm - 1.0 + rho); }) +
           eig_sum(base, from_first, [&](double rho) {
               return dm * (dm - 1.0) / (dm * dm - dm + (dm - 2.0) * rho);
           });
}

double h2_first_sum(const BaseGraphData& base, int m, bool from_first) {
    const double dm = m;
    return eig_sum(base, from_first,
                   [&](double rho) { return 2.0 * dm / (2.0 * dm + (dm - 2.0) * rho); });
}

double half_factor_sum(const BaseGraphData& base, bool from_first) {
    return eig_sum(base, from_first, [](double rho) { return 2.0 / (2.0 - rho); });
}

double h3_first_sum(const BaseGraphData& base, bool from_first) {
    return eig_sum(base, from_first, [](double rho) { return 2.0 / (2.0 + rho); });
}

} // namespace

double closed_form_invariant(const BaseGraphData& base, const OperationKind& op,
                             InvariantId which, FormulaMode mode) {
    if (!has_invariant_formulas(op.tag)) {
        throw std::invalid_argument(op.id() + ": no closed-form invariant for this operation");
    }
    const int m = op.m;
    if (m < invariant_min_m(op.tag)) {
        throw MOutOfTheoremRangeError(op.id() + ": invariant closed forms stated for m >= " +
                                      std::to_string(invariant_min_m(op.tag)));
    }
    const double dm = m;
    const double p = base.p;
    const double q = static_cast<double>(base.q);
    const bool corrected = (mode == FormulaMode::Corrected);

    switch (op.tag) {
        case OpTag::Splitting: {
            // corrected: sum over all eigenvalues; Kirchhoff prefactor from the
            // true edge count (2m+1)q of the construction.
            const double k = splitting_kemeny(base, m, corrected);
            switch (which) {
                case InvariantId::Kemeny: return k;
                case InvariantId::Kirchhoff:
                    if (corrected) return 2.0 * (2.0 * dm + 1.0) * q * k;
                    return 2.0 * (dm + 1.0) * q * (k - base.kemeny) + (dm + 1.0) * base.kirchhoff;
                case InvariantId::SpanningTrees:
                    return std::pow(dm + 1.0, p) * degree_product_pow(base, m) * base.trees *
                           eig_prod(base, [&](double rho) { return 1.0 + dm * rho / (dm + 1.0); }) /
                           (2.0 * dm + 1.0);
            }
            break;
        }
        case OpTag::Shadow: {
            switch (which) {
                case InvariantId::Kemeny: return p * (dm - 1.0) + base.kemeny;
                case InvariantId::Kirchhoff:
                    return 2.0 * dm * dm * q * p * (dm - 1.0) + dm * dm * base.kirchhoff;
                case InvariantId::SpanningTrees:
                    return std::pow(dm, dm * p) * degree_product_pow(base, m - 1) * base.trees /
                           (dm * dm);
            }
            break;
        }
        case OpTag::H1: {
            const double constant = corrected ? p * (dm - 3.0) : (dm - 3.0);
            const double k = constant + base.kemeny + h1_sums(base, m, corrected);
            switch (which) {
                case InvariantId::Kemeny: return k;
                case InvariantId::Kirchhoff:
                    return 2.0 * (dm * dm - 2.0) * q * (k - base.kemeny) +
                           (dm * dm - 2.0) * base.kirchhoff;
                case InvariantId::SpanningTrees: {
                    const double stripped_copies =
                        corrected ? std::pow(dm - 1.0, 2.0 * p) : (dm - 1.0) * (dm - 1.0);
                    return std::pow(dm, (dm - 2.0) * p) * stripped_copies *
                           degree_product_pow(base, m - 1) * base.trees *
                           eig_prod(base, [&](double rho) { return 1.0 + rho / (dm - 1.0); }) *
                           eig_prod(base,
                                    [&](double rho) {
                                        return 1.0 + (dm - 2.0) * rho / (dm * (dm - 1.0));
                                    }) /
                           (dm * dm - 2.0);
                }
            }
            break;
        }
        case OpTag::H2: {
            double k;
            if (corrected) {
                k = base.kemeny + h2_first_sum(base, m, true) +
                    (dm - 2.0) * half_factor_sum(base, true);
            } else {
                k = (dm - 3.0) + base.kemeny + h2_first_sum(base, m, false) +
                    half_factor_sum(base, false);
            }
            switch (which) {
                case InvariantId::Kemeny: return k;
                case InvariantId::Kirchhoff:
                    return 2.0 * (3.0 * dm - 2.0) * q * (k - base.kemeny) +
                           (3.0 * dm - 2.0) * base.kirchhoff;
                case InvariantId::SpanningTrees: {
                    const double last_block =
                        corrected
                            ? eig_prod(base,
                                       [&](double rho) { return std::pow(1.0 - rho / 2.0, m - 2); })
                            : eig_prod(base, [](double rho) { return 1.0 + rho / 2.0; });
                    return std::pow(2.0, (dm - 1.0) * p) * std::pow(dm, p) *
                           degree_product_pow(base, m - 1) * base.trees *
                           eig_prod(base,
                                    [&](double rho) { return 1.0 + (dm - 2.0) * rho / (2.0 * dm); }) *
                           last_block / (3.0 * dm - 2.0);
                }
            }
            break;
        }
        case OpTag::H3: {
            double k;
            if (corrected) {
                k = base.kemeny + h3_first_sum(base, true) +
                    (dm - 2.0) * half_factor_sum(base, true);
            } else {
                // the printed Kemeny form carries the Kirchhoff-shaped prefactor
                k = 6.0 * (dm - 1.0) * q *
                    (base.kemeny + h3_first_sum(base, false) + half_factor_sum(base, false));
            }
            switch (which) {
                case InvariantId::Kemeny: return k;
                case InvariantId::Kirchhoff:
                    if (corrected) return 6.0 * (dm - 1.0) * q * k;
                    return 6.0 * (dm - 1.0) * q *
                               (h3_first_sum(base, false) + half_factor_sum(base, false)) +
                           3.0 * (dm - 1.0) * base.kirchhoff;
                case InvariantId::SpanningTrees: {
                    const double minus_block =
                        corrected
                            ? eig_prod(base,
                                       [&](double rho) { return std::pow(1.0 - rho / 2.0, m - 2); })
                            : eig_prod(base, [](double rho) { return 1.0 - rho / 2.0; });
                    return std::pow(2.0, (dm - 1.0) * p) * std::pow(dm - 1.0, p) *
                           degree_product_pow(base, m - 1) * base.trees *
                           eig_prod(base, [](double rho) { return 1.0 + rho / 2.0; }) *
                           minus_block / (3.0 * (dm - 1.0));
                }
            }
            break;
        }
        case OpTag::DuplicateIter: break; // handled above
    }
    throw std::invalid_argument("unhandled closed-form invariant request");
}

std::string to_string(Verdict v) { return v == Verdict::Match ? "MATCH" : "MISMATCH"; }

SpectrumMatch compare_spectra(const Spectrum& a, const Spectrum& b) {
    SpectrumMatch out;
    out.multiplicities_equal = a.groups().size() == b.groups().size();
    if (out.multiplicities_equal) {
        for (size_t i = 0; i < a.groups().size(); ++i) {
            if (a.groups()[i].multiplicity != b.groups()[i].multiplicity) {
                out.multiplicities_equal = false;
                break;
            }
        }
    }
    if (a.total_multiplicity() != b.total_multiplicity()) {
        out.max_abs_diff = mismatch_sentinel;
        return out;
    }
    const auto va = a.expand();
    const auto vb = b.expand();
    for (size_t i = 0; i < va.size(); ++i) {
        out.max_abs_diff = std::max(out.max_abs_diff, std::abs(va[i] - vb[i]));
    }
    return out;
}

namespace {

Verdict verdict_for(double abs_diff, double oracle, double match_tol) {
    return abs_diff <= std::max(match_tol, 1e-9 * std::abs(oracle)) ? Verdict::Match
                                                                    : Verdict::Mismatch;
}

} // namespace

std::vector<VerificationRecord> verify_all(const Graph& g,
                                           const std::vector<OperationKind>& ops,
                                           const VerifyOptions& options) {
    if (g.order() < 1) throw EmptyGraphError("verify requires a non-empty graph");
    if (g.has_isolated_vertex()) {
        throw IsolatedVertexError("verify requires a graph without isolated vertices");
    }
    require_connected_for(g, "verify");

    const Spectrum base_adj = spectrum(g, MatrixKind::Adjacency, options.solver_tol, options.group_tol);
    const Spectrum base_randic = spectrum(g, MatrixKind::Randic, options.solver_tol, options.group_tol);
    const BaseGraphData base = base_graph_data(g, options.solver_tol);
    const int p = g.order();

    std::vector<VerificationRecord> records;
    auto guarded = [&](const std::string& formula_id, auto&& body) {
        VerificationRecord rec;
        rec.formula_id = formula_id;
        try {
            body(rec);
        } catch (const std::exception& e) {
            rec.closed_form = 0.0;
            rec.oracle = 0.0;
            rec.abs_diff = mismatch_sentinel;
            rec.verdict = Verdict::Mismatch;
            rec.note = std::string("error: ") + e.what();
        }
        records.push_back(std::move(rec));
    };

    for (const auto& op : ops) {
        const size_t block_start = records.size();
        Graph constructed = apply(g, op);

        for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Randic}) {
            if (op.m < theorem_min_m(op.tag, kind)) continue; // closed form not stated
            const Spectrum& base_spec =
                (kind == MatrixKind::Adjacency) ? base_adj : base_randic;
            const Spectrum oracle_spec =
                spectrum(constructed, kind, options.solver_tol, options.group_tol);

            guarded(op.id() + "/spectrum/" + to_string(kind), [&](VerificationRecord& rec) {
                const Spectrum predicted =
                    predict_spectrum(base_spec, p, op, kind, options.group_tol);
                const SpectrumMatch cmp = compare_spectra(predicted, oracle_spec);
                rec.closed_form = predicted.energy();
                rec.oracle = oracle_spec.energy();
                rec.abs_diff = cmp.multiplicities_equal ? cmp.max_abs_diff : mismatch_sentinel;
                rec.verdict = verdict_for(rec.abs_diff, rec.oracle, options.match_tol);
                rec.note = cmp.multiplicities_equal
                               ? "multiset comparison; abs_diff is the largest per-eigenvalue gap"
                               : "multiplicity patterns differ";
            });

            guarded(op.id() + "/energy/" + to_string(kind), [&](VerificationRecord& rec) {
                rec.closed_form = predict_energy(base_spec.energy(), p, op, kind);
                rec.oracle = oracle_spec.energy();
                rec.abs_diff = std::abs(rec.closed_form - rec.oracle);
                rec.verdict = verdict_for(rec.abs_diff, rec.oracle, options.match_tol);
            });
        }

        if (has_invariant_formulas(op.tag) && op.m >= invariant_min_m(op.tag)) {
            const double oracle_kemeny = kemeny(constructed, options.solver_tol);
            const double oracle_kirchhoff = 2.0 * constructed.size() * oracle_kemeny;
            const double oracle_trees = spanning_trees(constructed, options.solver_tol);
            for (InvariantId which :
                 {InvariantId::Kemeny, InvariantId::Kirchhoff, InvariantId::SpanningTrees}) {
                const double oracle_value = which == InvariantId::Kemeny      ? oracle_kemeny
                                            : which == InvariantId::Kirchhoff ? oracle_kirchhoff
                                                                              : oracle_trees;
                for (FormulaMode mode : {FormulaMode::AsPrinted, FormulaMode::Corrected}) {
                    if (mode == FormulaMode::AsPrinted && !options.as_printed) continue;
                    if (mode == FormulaMode::Corrected && !options.corrected) continue;
                    guarded(op.id() + "/" + to_string(which) + "/" + to_string(mode),
                            [&](VerificationRecord& rec) {
                                rec.closed_form = closed_form_invariant(base, op, which, mode);
                                rec.oracle = oracle_value;
                                rec.abs_diff = std::abs(rec.closed_form - rec.oracle);
                                rec.verdict = verdict_for(rec.abs_diff, rec.oracle, options.match_tol);
                            });
                }
            }
        }

        std::sort(records.begin() + block_start, records.end(),
                  [](const VerificationRecord& a, const VerificationRecord& b) {
                      return a.formula_id < b.formula_id;
                  });
    }
    return records;
}

} // namespace specgraph
