#include <catch2/catch_amalgamated.hpp>

#include "entropyflow/linalg/hermitian_eigen.hpp"
#include "entropyflow/linalg/kron.hpp"
#include "entropyflow/linalg/matrix_function.hpp"
#include "entropyflow/linalg/vectorize.hpp"
#include "entropyflow/random/sample.hpp"
#include "support/oracles.hpp"

using namespace entropyflow;

namespace {

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

ComplexMatrix reconstruct(const HermitianEigenSystem& sys) {
    const std::size_t n = sys.eigenvalues.size();
    ComplexMatrix lambda(n, n);
    for (std::size_t k = 0; k < n; ++k) lambda(k, k) = sys.eigenvalues[k];
    return sys.eigenvectors * lambda * sys.eigenvectors.adjoint();
}

} // namespace

TEST_CASE("constructors reject non-finite entries") {
    CHECK_THROWS_MATCHES(
        ComplexMatrix(1, 2, {Complex{1.0, 0.0}, Complex{std::nan(""), 0.0}}), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.kind() == ErrorKind::NonFinite; }));
}

TEST_CASE("hermitian eigendecomposition on closed-form inputs") {
    SECTION("identity") {
        const auto sys = hermitian_eigendecompose(ComplexMatrix::identity(2));
        CHECK(sys.eigenvalues[0] == Catch::Approx(1.0).margin(1e-14));
        CHECK(sys.eigenvalues[1] == Catch::Approx(1.0).margin(1e-14));
    }
    SECTION("diagonal") {
        const auto sys =
            hermitian_eigendecompose(ComplexMatrix::from_rows({{3.0, 0.0}, {0.0, -1.0}}));
        CHECK(sys.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-14));
        CHECK(sys.eigenvalues[1] == Catch::Approx(3.0).margin(1e-14));
    }
    SECTION("pauli-x: characteristic polynomial gives -1 and +1") {
        const auto sys = hermitian_eigendecompose(pauli_x());
        CHECK(oracles::spectra_match(sys.eigenvalues, {-1.0, 1.0}, 1e-13));
    }
}

TEST_CASE("eigendecomposition invariants on random Hermitian matrices") {
    Rng rng(101);
    for (std::size_t n : {2, 3, 7, 16, 33, 64}) {
        const ComplexMatrix a = random_hermitian(rng, n);
        const auto sys = hermitian_eigendecompose(a);
        REQUIRE(std::is_sorted(sys.eigenvalues.begin(), sys.eigenvalues.end()));
        CHECK(frobenius_norm(reconstruct(sys) - a) <= 1e-10 * frobenius_norm(a));
        CHECK(frobenius_norm(sys.eigenvectors.adjoint() * sys.eigenvectors -
                             ComplexMatrix::identity(n)) <= 1e-10);
    }
}

TEST_CASE("eigendecomposition rejects bad inputs") {
    CHECK_THROWS_MATCHES(hermitian_eigendecompose(ComplexMatrix::from_rows({{0.0, 1.0},
                                                                            {0.0, 0.0}})),
                         Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::NotHermitian;
                         }));
    CHECK_THROWS_MATCHES(hermitian_eigendecompose(ComplexMatrix(2, 3)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::DimensionMismatch;
                         }));
}

TEST_CASE("matrix_function on closed-form inputs") {
    SECTION("exp of the zero matrix is the identity") {
        const ComplexMatrix e = matrix_function(ComplexMatrix(2, 2),
                                                [](double x) { return std::exp(x); });
        CHECK(max_abs(e - ComplexMatrix::identity(2)) <= 1e-14);
    }
    SECTION("log of diag(e, e^2)") {
        const ComplexMatrix a = ComplexMatrix::from_rows(
            {{std::exp(1.0), 0.0}, {0.0, std::exp(2.0)}});
        const ComplexMatrix l = matrix_function(a, [](double x) { return std::log(x); });
        CHECK(l(0, 0).real() == Catch::Approx(1.0).margin(1e-13));
        CHECK(l(1, 1).real() == Catch::Approx(2.0).margin(1e-13));
        CHECK(std::abs(l(0, 1)) <= 1e-13);
    }
    SECTION("exp of pauli-x is cosh/sinh") {
        const ComplexMatrix e = matrix_function(pauli_x(), [](double x) { return std::exp(x); });
        CHECK(e(0, 0).real() == Catch::Approx(std::cosh(1.0)).margin(1e-12));
        CHECK(e(0, 1).real() == Catch::Approx(std::sinh(1.0)).margin(1e-12));
        CHECK(e(1, 0).real() == Catch::Approx(std::sinh(1.0)).margin(1e-12));
        CHECK(e(1, 1).real() == Catch::Approx(std::cosh(1.0)).margin(1e-12));
    }
    SECTION("DomainError when f blows up on the spectrum") {
        CHECK_THROWS_MATCHES(matrix_function(ComplexMatrix(2, 2),
                                             [](double x) { return std::log(x); }),
                             Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::DomainError;
                             }));
    }
}

TEST_CASE("matrix exp times exp of the negative is the identity") {
    Rng rng(202);
    for (int i = 0; i < 5; ++i) {
        const ComplexMatrix a = random_hermitian_with_spectrum(rng, 8, -5.0, 5.0);
        const ComplexMatrix e = matrix_function(a, [](double x) { return std::exp(x); });
        const ComplexMatrix em = matrix_function(a, [](double x) { return std::exp(-x); });
        CHECK(frobenius_norm(e * em - ComplexMatrix::identity(8)) <= 1e-8);
    }
}

TEST_CASE("expm (scaling and squaring) cross-checks") {
    SECTION("nilpotent closed form") {
        const ComplexMatrix n = ComplexMatrix::from_rows({{0.0, 3.0}, {0.0, 0.0}});
        const ComplexMatrix e = expm(n);
        CHECK(max_abs(e - (ComplexMatrix::identity(2) + n)) <= 1e-13);
    }
    SECTION("agrees with the spectral route on Hermitian inputs") {
        Rng rng(303);
        const ComplexMatrix a = random_hermitian(rng, 6);
        const ComplexMatrix spectral =
            matrix_function(a, [](double x) { return std::exp(x); });
        CHECK(max_abs(expm(a) - spectral) <= 1e-11);
    }
}

TEST_CASE("tensor product") {
    SECTION("identity factors") {
        CHECK(max_abs(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) -
                      ComplexMatrix::identity(6)) == 0.0);
    }
    SECTION("diagonal case") {
        const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
        const ComplexMatrix b = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
        const ComplexMatrix t = tensor_product(a, b);
        CHECK(t(1, 1).real() == 1.0);
        CHECK(std::abs(trace(t).real() - 1.0) == 0.0);
    }
    SECTION("matches the index-formula oracle on random inputs") {
        Rng rng(404);
        const ComplexMatrix a = random_complex_gaussian(rng, 3, 2);
        const ComplexMatrix b = random_complex_gaussian(rng, 2, 4);
        CHECK(max_abs(tensor_product(a, b) - oracles::kron_oracle(a, b)) == 0.0);
    }
    SECTION("pauli-x tensor identity swaps blocks") {
        const ComplexMatrix t = tensor_product(pauli_x(), ComplexMatrix::identity(2));
        CHECK(max_abs(t - oracles::kron_oracle(pauli_x(), ComplexMatrix::identity(2))) == 0.0);
        CHECK(t(0, 2).real() == 1.0);
        CHECK(t(1, 3).real() == 1.0);
        CHECK(t(2, 0).real() == 1.0);
        CHECK(t(3, 1).real() == 1.0);
    }
}

TEST_CASE("partial trace") {
    Rng rng(505);
    SECTION("product state marginal") {
        const DensityMatrix a = random_density_matrix(rng, 3);
        const DensityMatrix b = random_density_matrix(rng, 2);
        const ComplexMatrix ab = tensor_product(a.matrix(), b.matrix());
        CHECK(max_abs(partial_trace(ab, 3, 2, Subsystem::A) - a.matrix()) <= 1e-12);
        CHECK(max_abs(partial_trace(ab, 3, 2, Subsystem::B) - b.matrix()) <= 1e-12);
    }
    SECTION("bell state marginal is maximally mixed") {
        const DensityMatrix bell = DensityMatrix::bell_phi_plus();
        const ComplexMatrix half = partial_trace(bell.matrix(), 2, 2, Subsystem::A);
        CHECK(max_abs(half - (0.5 * ComplexMatrix::identity(2))) <= 1e-14);
    }
    SECTION("diagonal index-summation example") {
        ComplexMatrix d(4, 4);
        d(0, 0) = 0.1;
        d(1, 1) = 0.2;
        d(2, 2) = 0.3;
        d(3, 3) = 0.4;
        const ComplexMatrix kept = partial_trace(d, 2, 2, Subsystem::B);
        CHECK(kept(0, 0).real() == Catch::Approx(0.4).margin(1e-15));
        CHECK(kept(1, 1).real() == Catch::Approx(0.6).margin(1e-15));
    }
    SECTION("matches the oracle and preserves the trace on random inputs") {
        const ComplexMatrix ab = random_complex_gaussian(rng, 6, 6);
        const ComplexMatrix ta = partial_trace(ab, 2, 3, Subsystem::A);
        const ComplexMatrix tb = partial_trace(ab, 2, 3, Subsystem::B);
        CHECK(max_abs(ta - oracles::ptrace_b_oracle(ab, 2, 3)) == 0.0);
        CHECK(max_abs(tb - oracles::ptrace_a_oracle(ab, 2, 3)) == 0.0);
        CHECK(std::abs(trace(ta) - trace(ab)) <= 1e-13);
        CHECK(std::abs(trace(tb) - trace(ab)) <= 1e-13);
    }
    SECTION("tensor-then-trace identity") {
        const ComplexMatrix a = random_hermitian(rng, 3);
        const ComplexMatrix b = random_hermitian(rng, 4);
        const ComplexMatrix lhs = partial_trace(tensor_product(a, b), 3, 4, Subsystem::A);
        CHECK(max_abs(lhs - trace(b) * a) <= 1e-10);
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_MATCHES(partial_trace(ComplexMatrix::identity(5), 2, 2, Subsystem::A),
                             Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::DimensionMismatch;
                             }));
    }
}

TEST_CASE("vectorization") {
    SECTION("round-trip is exact") {
        Rng rng(606);
        const ComplexMatrix x = random_complex_gaussian(rng, 5, 5);
        CHECK(max_abs(unvectorize(vectorize(x), 5) - x) == 0.0);
    }
    SECTION("row-major convention: vec stacks rows") {
        ComplexMatrix x(2, 2);
        x(0, 0) = 1.0;
        x(0, 1) = 2.0;
        x(1, 0) = 3.0;
        x(1, 1) = 4.0;
        const ComplexMatrix v = vectorize(x);
        CHECK(v(0, 0).real() == 1.0);
        CHECK(v(1, 0).real() == 2.0);
        CHECK(v(2, 0).real() == 3.0);
        CHECK(v(3, 0).real() == 4.0);
    }
    SECTION("identity action vectorizes to the identity") {
        const ComplexMatrix s =
            vectorize_superoperator(2, [](const ComplexMatrix& x) { return x; });
        CHECK(max_abs(s - ComplexMatrix::identity(4)) == 0.0);
    }
    SECTION("conjugation by pauli-x is the block anti-diagonal permutation") {
        const ComplexMatrix u = pauli_x();
        const ComplexMatrix s = vectorize_superoperator(
            2, [&u](const ComplexMatrix& x) { return u * x * u.adjoint(); });
        // matrix units map E0<->E3 and E1<->E2; equals conj(U) (x) U here
        CHECK(max_abs(s - oracles::kron_oracle(u.conjugate(), u)) <= 1e-14);
    }
    SECTION("trace-collapse action has the expected rank-1 image") {
        const ComplexMatrix s = vectorize_superoperator(2, [](const ComplexMatrix& x) {
            return (0.5 * trace(x)) * ComplexMatrix::identity(2);
        });
        ComplexMatrix expected(4, 4);
        expected(0, 0) = 0.5;
        expected(0, 3) = 0.5;
        expected(3, 0) = 0.5;
        expected(3, 3) = 0.5;
        CHECK(max_abs(s - expected) <= 1e-14);
    }
    SECTION("nonlinear actions are rejected") {
        CHECK_THROWS_MATCHES(
            vectorize_superoperator(2, [](const ComplexMatrix& x) { return x * x; }), Error,
            Catch::Matchers::Predicate<Error>(
                [](const Error& e) { return e.kind() == ErrorKind::NonlinearAction; }));
    }
}
