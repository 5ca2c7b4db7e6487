#include <catch2/catch_amalgamated.hpp>

#include <qrac/matrix.hpp>

#include <complex>
#include <random>

using namespace qrac;

namespace {

ComplexMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = cplx{gauss(rng), gauss(rng)};
    return m;
}

} // namespace

TEST_CASE("matrix arithmetic basics") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = cplx{0.0, 2.0};
    a(1, 0) = -3.0;
    a(1, 1) = cplx{4.0, -1.0};

    SECTION("addition and subtraction") {
        ComplexMatrix b = a + a;
        CHECK(b(0, 1) == cplx{0.0, 4.0});
        ComplexMatrix z = b - a - a;
        CHECK(z.frobenius_norm() == 0.0);
    }

    SECTION("scalar multiplication") {
        ComplexMatrix b = cplx{0.0, 1.0} * a;
        CHECK(b(0, 0) == cplx{0.0, 1.0});
        CHECK(b(0, 1) == cplx{-2.0, 0.0});
    }

    SECTION("product against hand result") {
        ComplexMatrix i2 = ComplexMatrix::identity(2);
        CHECK(frobenius_distance(a * i2, a) == 0.0);
        ComplexMatrix sq = a * a;
        // (0,0) entry: 1*1 + 2i*(-3)
        CHECK(sq(0, 0) == cplx{1.0, -6.0});
    }

    SECTION("dagger and trace") {
        ComplexMatrix ad = a.dagger();
        CHECK(ad(1, 0) == cplx{0.0, -2.0});
        CHECK(a.trace() == cplx{5.0, -1.0});
    }

    SECTION("shape mismatch throws") {
        ComplexMatrix b(3, 2);
        CHECK_THROWS_AS(a + b, std::invalid_argument);
        CHECK_THROWS_AS(frobenius_distance(a, b), std::invalid_argument);
        CHECK_THROWS_AS(b.trace(), std::invalid_argument);
    }
}

TEST_CASE("kron products") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);

    SECTION("identity times identity") {
        CHECK(frobenius_distance(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);
    }

    SECTION("diagonal projectors") {
        ComplexMatrix p0(2, 2), p1(2, 2);
        p0(0, 0) = 1.0;
        p1(1, 1) = 1.0;
        ComplexMatrix k = kron(p0, p1);
        ComplexMatrix expect(4, 4);
        expect(1, 1) = 1.0;
        CHECK(frobenius_distance(k, expect) == 0.0);
    }

    SECTION("sigma_x tensor sigma_x maps |00> to |11>") {
        ComplexMatrix sx(2, 2);
        sx(0, 1) = 1.0;
        sx(1, 0) = 1.0;
        StateVector v00 = {1.0, 0.0, 0.0, 0.0};
        StateVector out = mat_vec(kron(sx, sx), v00);
        CHECK(std::abs(out[3] - 1.0) == 0.0);
        CHECK(vector_norm(out) == 1.0);
    }

    SECTION("associativity on dimensions") {
        std::mt19937_64 rng(7);
        ComplexMatrix a = random_matrix(2, 3, rng);
        ComplexMatrix b = random_matrix(3, 2, rng);
        ComplexMatrix c = random_matrix(2, 2, rng);
        CHECK(frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
    }
}

TEST_CASE("frobenius distance") {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    ComplexMatrix z2(2, 2);
    CHECK(frobenius_distance(i2, i2) == 0.0);
    CHECK(frobenius_distance(i2, z2) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
    ComplexMatrix d0(2, 2), d1(2, 2);
    d0(0, 0) = 1.0;
    d1(1, 1) = 1.0;
    CHECK(frobenius_distance(d0, d1) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
}

TEST_CASE("vector helpers") {
    StateVector v = {cplx{0.6, 0.0}, cplx{0.0, 0.8}};
    CHECK(vector_norm(v) == Catch::Approx(1.0).margin(1e-15));
    CHECK(inner_product(v, v).real() == Catch::Approx(1.0).margin(1e-15));

    ComplexMatrix p = projector(v);
    CHECK(p.trace().real() == Catch::Approx(1.0).margin(1e-15));
    CHECK(hermiticity_defect(p) < 1e-15);
    // projector is idempotent
    CHECK(frobenius_distance(p * p, p) < 1e-15);

    StateVector u = {1.0, 0.0};
    CHECK(std::abs(inner_product(u, v) - cplx{0.6, 0.0}) < 1e-15);
    CHECK_THROWS_AS(inner_product(u, StateVector(3)), std::invalid_argument);
}
