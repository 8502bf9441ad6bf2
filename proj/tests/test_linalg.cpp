#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specgraph/linalg.hpp"
#include "specgraph/spectral.hpp"
#include "test_support.hpp"

using namespace specgraph;

namespace {

DenseSymMatrix random_symmetric(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    DenseSymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
    return m;
}

} // namespace

TEST_CASE("DenseSymMatrix construction validates") {
    CHECK_NOTHROW(DenseSymMatrix::from_rows(2, {0, 1, 1, 0}));
    CHECK_THROWS_AS(DenseSymMatrix::from_rows(2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DenseSymMatrix::from_rows(2, {0, 1, 1}), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(DenseSymMatrix::from_rows(2, {0, nan, nan, 0}), std::invalid_argument);

    DenseSymMatrix m(3);
    m.set(0, 2, 5.0);
    CHECK(m(2, 0) == 5.0);
}

TEST_CASE("sym_eigenvalues on closed-form cases") {
    const auto k2 = sym_eigenvalues(matrix(complete(2), MatrixKind::Adjacency));
    CHECK(k2[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k2[1] == doctest::Approx(1.0).epsilon(1e-12));

    // 4-cycle: circulant eigenvalues 2cos(2 pi k / 4) = {-2, 0, 0, 2}
    const auto c4 = sym_eigenvalues(matrix(cycle(4), MatrixKind::Adjacency));
    CHECK(sgtest::multiset_close(c4, {-2, 0, 0, 2}, 1e-10));

    const auto eye = sym_eigenvalues(DenseSymMatrix::identity(5));
    CHECK(sgtest::multiset_close(eye, {1, 1, 1, 1, 1}, 1e-12));

    CHECK(sym_eigenvalues(DenseSymMatrix(0)).empty());
    const auto single = sym_eigenvalues(DenseSymMatrix::from_rows(1, {7.5}));
    CHECK(single == std::vector<double>{7.5});
}

TEST_CASE("sym_eigenvalues matches the family formulas") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(sgtest::multiset_close(sym_eigenvalues(matrix(complete(n), MatrixKind::Adjacency)),
                                     sgtest::complete_spectrum(n), 1e-9));
        CHECK(sgtest::multiset_close(sym_eigenvalues(matrix(star(n), MatrixKind::Adjacency)),
                                     sgtest::star_spectrum(n), 1e-9));
        CHECK(sgtest::multiset_close(sym_eigenvalues(matrix(path(n), MatrixKind::Adjacency)),
                                     sgtest::path_spectrum(n), 1e-9));
        if (n >= 3) {
            CHECK(sgtest::multiset_close(sym_eigenvalues(matrix(cycle(n), MatrixKind::Adjacency)),
                                         sgtest::cycle_spectrum(n), 1e-9));
        }
    }
    CHECK(sgtest::multiset_close(sym_eigenvalues(matrix(petersen(), MatrixKind::Adjacency)),
                                 sgtest::petersen_spectrum(), 1e-9));
}

TEST_CASE("jacobi preserves trace and Frobenius norm") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 11;
        const DenseSymMatrix m = random_symmetric(rng, n);
        const auto eigs = sym_eigenvalues(m);
        double sum = 0.0, sum_sq = 0.0;
        for (double v : eigs) {
            sum += v;
            sum_sq += v * v;
        }
        const double scale = std::max(1.0, m.frobenius_norm());
        CHECK(std::abs(sum - m.trace()) <= 1e-9 * scale);
        CHECK(std::abs(sum_sq - m.frobenius_norm() * m.frobenius_norm()) <=
              1e-9 * scale * scale);
    }
}

TEST_CASE("jacobi reports non-convergence when the sweep budget runs out") {
    std::mt19937 rng(3);
    const DenseSymMatrix m = random_symmetric(rng, 8);
    CHECK_THROWS_AS(sym_eigenvalues(m, 1e-11, 1), NoConvergenceError);
    CHECK_NOTHROW(sym_eigenvalues(m, 1e-11));
    CHECK_THROWS_AS(sym_eigenvalues(m, -1.0), std::invalid_argument);
}

TEST_CASE("group_multiplicities") {
    const Spectrum s = group_multiplicities(std::vector<double>{-1.0, 1.0 - 1e-9, 1.0}, 1e-7);
    REQUIRE(s.groups().size() == 2);
    CHECK(s.groups()[0].value == doctest::Approx(-1.0));
    CHECK(s.groups()[0].multiplicity == 1);
    CHECK(s.groups()[1].value == doctest::Approx(1.0));
    CHECK(s.groups()[1].multiplicity == 2);

    const auto c4 = sym_eigenvalues(matrix(cycle(4), MatrixKind::Adjacency));
    const Spectrum grouped = group_multiplicities(c4);
    REQUIRE(grouped.groups().size() == 3);
    CHECK(grouped.groups()[0].multiplicity == 1);
    CHECK(grouped.groups()[1].multiplicity == 2);
    CHECK(grouped.groups()[2].multiplicity == 1);
    CHECK(grouped.total_multiplicity() == 4);

    CHECK(group_multiplicities(std::vector<double>{}).empty());

    // values within tolerance of the running mean chain into one group
    const Spectrum chained =
        group_multiplicities(std::vector<double>{0.0, 0.6e-7, 1.2e-7}, 1e-7);
    REQUIRE(chained.groups().size() == 1);
    CHECK(chained.groups()[0].multiplicity == 3);
}

TEST_CASE("spectrum helpers") {
    const Spectrum s(std::vector<SpectrumGroup>{{-2.0, 1}, {0.0, 2}, {2.0, 1}});
    CHECK(s.total_multiplicity() == 4);
    CHECK(s.energy() == doctest::Approx(4.0));
    CHECK(s.expand() == std::vector<double>{-2, 0, 0, 2});
    CHECK(s.min_value() == -2.0);
    CHECK(s.max_value() == 2.0);
}

TEST_CASE("kron layout") {
    const DenseSymMatrix a = matrix(complete(2), MatrixKind::Adjacency);
    const DenseSymMatrix block = kron(DenseSymMatrix::identity(2), a);
    CHECK(block.order() == 4);
    CHECK(block(0, 1) == 1.0);
    CHECK(block(2, 3) == 1.0);
    CHECK(block(0, 2) == 0.0);
    CHECK(block(1, 3) == 0.0);

    const DenseSymMatrix ones2 = sgtest::shadow_backbone(2);
    const auto spectrum_kron = sym_eigenvalues(kron(ones2, a));
    const auto spectrum_c4 = sym_eigenvalues(matrix(cycle(4), MatrixKind::Adjacency));
    CHECK(sgtest::multiset_close(spectrum_kron, spectrum_c4, 1e-10));
}

TEST_CASE("kron eigenvalues are pairwise products") {
    std::mt19937 rng(23);
    for (int n : {3, 5, 8, 12}) {
        const DenseSymMatrix m = random_symmetric(rng, n);
        const auto base = sym_eigenvalues(m);
        std::vector<double> expected;
        for (double x : base)
            for (double y : base) expected.push_back(x * y);
        const auto actual = sym_eigenvalues(kron(m, m));
        CHECK(sgtest::multiset_close(actual, expected, 1e-7));
    }
    // distinct factors as well
    const DenseSymMatrix a = random_symmetric(rng, 3);
    const DenseSymMatrix b = random_symmetric(rng, 3);
    std::vector<double> expected;
    for (double x : sym_eigenvalues(a))
        for (double y : sym_eigenvalues(b)) expected.push_back(x * y);
    CHECK(sgtest::multiset_close(sym_eigenvalues(kron(a, b)), expected, 1e-8));
}
