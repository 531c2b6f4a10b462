#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "snn/spectral.hpp"
#include "support/fixtures.hpp"

using namespace snn;
using snn::testing::random_complex;
using snn::testing::toy_complex;
using snn::testing::toy_degree1_laplacian;
using snn::testing::toy_edge_cochain;
using snn::testing::toy_vertex_cochain;

namespace {

Matrix<double> dense(const SparseMatrix<double>& m) { return Matrix<double>(m); }

}  // namespace

TEST_CASE("coboundary rows follow the alternating-sign convention") {
    const auto complex = toy_complex();

    const auto b0 = coboundary_matrix(complex, 0);
    REQUIRE(b0.rows() == 5);
    REQUIRE(b0.cols() == 4);
    Vector<double> row_ab(4);
    row_ab << -1, 1, 0, 0;
    CHECK(dense(b0).row(0).transpose() == row_ab);

    const auto b1 = coboundary_matrix(complex, 1);
    REQUIRE(b1.rows() == 1);
    REQUIRE(b1.cols() == 5);
    Vector<double> row_abc(5);
    row_abc << 1, -1, 0, 1, 0;  // AB, AC, AD, BC, CD
    CHECK(dense(b1).row(0).transpose() == row_abc);
}

TEST_CASE("coboundary beyond the top dimension is empty with the right shape") {
    const auto complex = toy_complex();
    const auto b2 = coboundary_matrix(complex, 2);
    CHECK(b2.rows() == 0);
    CHECK(b2.cols() == 1);
    const auto b9 = coboundary_matrix(complex, 9);
    CHECK(b9.rows() == 0);
    CHECK(b9.cols() == 0);
}

TEST_CASE("composing consecutive coboundaries gives zero") {
    const auto complex = toy_complex();
    const auto b1 = coboundary_matrix(complex, 1);
    const auto b0 = coboundary_matrix(complex, 0);
    CHECK(dense(SparseMatrix<double>(b1 * b0)).isZero(0.0));
}

TEST_CASE("degree-1 Laplacian of the toy complex, exact integer equality") {
    const auto lap = hodge_laplacian(toy_complex(), 1);
    CHECK(dense(lap.matrix) == toy_degree1_laplacian());
    CHECK(dense(lap.up + lap.down) == toy_degree1_laplacian());
}

TEST_CASE("degree-0 Laplacian is the graph Laplacian") {
    const auto lap = hodge_laplacian(toy_complex(), 0);
    Matrix<double> expected(4, 4);
    expected << 3, -1, -1, -1,  //
        -1, 2, -1, 0,           //
        -1, -1, 3, -1,          //
        -1, 0, -1, 2;
    CHECK(dense(lap.matrix) == expected);
    CHECK(dense(lap.down).isZero(0.0));
}

TEST_CASE("top-dimension Laplacian of a single triangle") {
    SimplicialComplex complex;
    complex.insert_closure(Simplex{0, 1, 2});
    const auto lap = hodge_laplacian(complex, 2);
    REQUIRE(lap.size() == 1);
    CHECK(dense(lap.matrix)(0, 0) == 3.0);
    CHECK(dense(lap.up).isZero(0.0));
}

TEST_CASE("hodge_laplacian rejects empty dimensions") {
    CHECK_THROWS_AS(hodge_laplacian(toy_complex(), 3), std::invalid_argument);
    SimplicialComplex empty;
    CHECK_THROWS_AS(hodge_laplacian(empty, 0), std::invalid_argument);
}

TEST_CASE("apply matches hand-computed products on the toy complex") {
    const auto complex = toy_complex();
    const auto lap = hodge_laplacian(complex, 1);
    Vector<double> expected_l1(5);
    expected_l1 << 460, 306, 274, 296, -182;
    CHECK(apply(lap.matrix, toy_edge_cochain()) == expected_l1);

    const auto b0 = coboundary_matrix(complex, 0);
    Vector<double> expected_b0(5);
    expected_b0 << -10, -56, -146, -46, -90;
    CHECK(apply(b0, toy_vertex_cochain()) == expected_b0);

    SparseMatrix<double> zero(3, 3);
    Vector<double> v(3);
    v << 1, 2, 3;
    CHECK(apply(zero, v) == Vector<double>::Zero(3));

    CHECK_THROWS_AS(apply(b0, toy_edge_cochain()), std::invalid_argument);
}

TEST_CASE("eigendecomposition basics") {
    SimplicialComplex isolated;
    isolated.insert_closure(Simplex{0});
    isolated.insert_closure(Simplex{1});
    const auto zero_basis = eigendecompose(hodge_laplacian(isolated, 0));
    CHECK(zero_basis.eigenvalues == Vector<double>::Zero(2));

    SimplicialComplex edge;
    edge.insert_closure(Simplex{0, 1});
    const auto basis = eigendecompose(hodge_laplacian(edge, 0));
    CHECK(basis.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(basis.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-12));

    const auto lap = hodge_laplacian(toy_complex(), 1);
    const auto toy_basis = eigendecompose(lap);
    const Matrix<double> reconstructed = toy_basis.vectors *
                                         toy_basis.eigenvalues.asDiagonal() *
                                         toy_basis.vectors.transpose();
    const double scale = std::max(1.0, dense(lap.matrix).cwiseAbs().maxCoeff());
    CHECK((reconstructed - dense(lap.matrix)).cwiseAbs().maxCoeff() <= 1e-8 * scale);
    const Matrix<double> gram = toy_basis.vectors.transpose() * toy_basis.vectors;
    CHECK((gram - Matrix<double>::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(eigendecompose(lap, 3), numerical_error);
}

TEST_CASE("fourier transform of eigencochains gives unit coefficient vectors") {
    const auto basis = eigendecompose(hodge_laplacian(toy_complex(), 1));
    for (Index i = 0; i < basis.size(); ++i) {
        const Vector<double> coeffs = fourier_transform(basis.vectors.col(i), basis);
        Vector<double> unit = Vector<double>::Zero(basis.size());
        unit(i) = 1.0;
        CHECK((coeffs - unit).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("fourier round trip is the identity") {
    const auto basis = eigendecompose(hodge_laplacian(toy_complex(), 1));
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Vector<double> c(5);
        for (Index i = 0; i < 5; ++i) c(i) = rng.uniform(-100, 100);
        const Vector<double> back = inverse_fourier_transform(fourier_transform(c, basis), basis);
        CHECK((back - c).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("constant vertex cochain lives in the zero-eigenvalue component") {
    const auto basis = eigendecompose(hodge_laplacian(toy_complex(), 0));
    const Vector<double> constant = Vector<double>::Constant(4, 5.0);
    const Vector<double> coeffs = fourier_transform(constant, basis);
    // connected 1-skeleton: lambda_0 = 0 is simple, all other coefficients vanish
    for (Index i = 1; i < coeffs.size(); ++i) CHECK(std::abs(coeffs(i)) < 1e-10);
    CHECK(std::abs(coeffs(0)) == doctest::Approx(10.0).epsilon(1e-12));  // |c| * sqrt(4)
}

TEST_CASE("spectral convolution with an identity basis is the entrywise product") {
    EigenBasis<double> basis;
    basis.eigenvalues = Vector<double>::Zero(3);
    basis.vectors = Matrix<double>::Identity(3, 3);
    Vector<double> c(3), c_prime(3);
    c << 1, -2, 3;
    c_prime << 4, 5, -6;
    CHECK(spectral_convolve(c, c_prime, basis) == Vector<double>(c.cwiseProduct(c_prime)));
}

TEST_CASE("the all-ones frequency response is the convolution identity") {
    const auto basis = eigendecompose(hodge_laplacian(toy_complex(), 1));
    const Vector<double> identity_filter =
        inverse_fourier_transform(Vector<double>::Ones(5), basis);
    const Vector<double> c = toy_edge_cochain();
    CHECK((spectral_convolve(c, identity_filter, basis) - c).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("polynomial filters agree with the spectral path") {
    const auto lap = hodge_laplacian(toy_complex(), 1);
    const auto basis = eigendecompose(lap);
    const Vector<double> c = toy_edge_cochain();
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int degree = static_cast<int>(rng.uniform_below(5)) + 1;
        std::vector<double> weights;
        for (int i = 0; i <= degree; ++i) weights.push_back(rng.uniform(-1, 1));

        Vector<double> spatial = Vector<double>::Zero(5);
        Vector<double> power = c;
        for (int i = 0; i <= degree; ++i) {
            if (i > 0) power = lap.matrix * power;
            spatial += weights[static_cast<std::size_t>(i)] * power;
        }

        Vector<double> response = Vector<double>::Zero(5);
        for (Index j = 0; j < 5; ++j)
            for (int i = 0; i <= degree; ++i)
                response(j) += weights[static_cast<std::size_t>(i)] *
                               std::pow(basis.eigenvalues(j), i);
        const Vector<double> spectral =
            spectral_convolve(c, inverse_fourier_transform(response, basis), basis);

        const double scale = std::max(1.0, spatial.cwiseAbs().maxCoeff());
        CHECK((spatial - spectral).cwiseAbs().maxCoeff() <= 1e-8 * scale);
    }
}

TEST_CASE("betti numbers of reference complexes") {
    SimplicialComplex hollow;
    hollow.insert_closure(Simplex{0, 1});
    hollow.insert_closure(Simplex{0, 2});
    hollow.insert_closure(Simplex{1, 2});
    CHECK(betti_number(hollow, 1) == 1);

    SimplicialComplex filled;
    filled.insert_closure(Simplex{0, 1, 2});
    CHECK(betti_number(filled, 1) == 0);

    const auto toy = toy_complex();
    CHECK(betti_number(toy, 0) == 1);
    CHECK(betti_number(toy, 1) == 1);  // the unfilled cycle A-C-D

    SimplicialComplex sphere;  // boundary of the tetrahedron on {0,1,2,3}
    sphere.insert_closure(Simplex{0, 1, 2});
    sphere.insert_closure(Simplex{0, 1, 3});
    sphere.insert_closure(Simplex{0, 2, 3});
    sphere.insert_closure(Simplex{1, 2, 3});
    CHECK(betti_number(sphere, 2) == 1);
    CHECK(betti_number(sphere, 1) == 0);
    CHECK(betti_number(sphere, 0) == 1);
}

TEST_CASE("coboundary composition and Laplacian positivity on random complexes") {
    Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const auto complex = random_complex(rng);
        for (int p = 0; p <= complex.top_dimension(); ++p) {
            const auto upper = coboundary_matrix(complex, p + 1);
            const auto lower = coboundary_matrix(complex, p);
            if (upper.rows() > 0) CHECK(dense(SparseMatrix<double>(upper * lower)).isZero(0.0));

            const auto lap = hodge_laplacian(complex, p);
            CHECK(dense(lap.matrix) == dense(lap.matrix).transpose().eval());
            const auto basis = eigendecompose(lap);
            CHECK(basis.eigenvalues(0) >= -1e-10);
        }
    }
}

TEST_CASE("degree-0 Laplacian equals D - A of the 1-skeleton") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto complex = random_complex(rng);
        const Index n = complex.count(0);
        Matrix<double> expected = Matrix<double>::Zero(n, n);
        for (const auto& edge : complex.simplices(1)) {
            const Index u = *complex.position(Simplex{edge[0]});
            const Index v = *complex.position(Simplex{edge[1]});
            expected(u, v) -= 1;
            expected(v, u) -= 1;
            expected(u, u) += 1;
            expected(v, v) += 1;
        }
        CHECK(dense(hodge_laplacian(complex, 0).matrix) == expected);
    }
}

TEST_CASE("Laplacian powers vanish beyond the simplicial distance") {
    Rng rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        const auto complex = random_complex(rng, 50);
        for (int p = 0; p <= complex.top_dimension(); ++p) {
            const auto& level = complex.simplices(p);
            const Index n = static_cast<Index>(level.size());
            if (n == 0) continue;
            const auto lap = hodge_laplacian(complex, p);
            SparseMatrix<double> power = lap.matrix;
            for (int N = 1; N <= 4; ++N) {
                if (N > 1) power = SparseMatrix<double>(power * lap.matrix);
                for (Index a = 0; a < n; ++a)
                    for (Index b = 0; b < n; ++b) {
                        const auto d = complex.simplicial_distance(
                            level[static_cast<std::size_t>(a)],
                            level[static_cast<std::size_t>(b)]);
                        if (!d.has_value() || *d > N) CHECK(power.coeff(a, b) == 0.0);
                    }
            }
        }
    }
}
