#include "grk/errors.hpp"
#include "grk/fflinalg.hpp"
#include "grk/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace grk;

TEST_CASE("primes and inverses") {
    CHECK(is_prime(2));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    for (std::uint32_t p : {2u, 3u, 7u, 101u})
        for (std::uint32_t a = 1; a < p; ++a) CHECK(static_cast<std::uint64_t>(a) * mod_inverse(a, p) % p == 1);
}

TEST_CASE("entries are reduced on input") {
    Matrix m = Matrix::from_rows({{-1, 5}, {7, -8}}, 3);
    CHECK(m(0, 0) == 2);
    CHECK(m(0, 1) == 2);
    CHECK(m(1, 0) == 1);
    CHECK(m(1, 1) == 1);
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}, 3), InputError);
}

TEST_CASE("shape mismatches throw") {
    CHECK_THROWS_AS(Matrix(2, 3, 5) * Matrix(2, 3, 5), InputError);
    CHECK_THROWS_AS(Matrix(2, 3, 5) + Matrix(2, 3, 3), InputError);
    CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 1}, {1, 1}}, 2)), InputError);
}

TEST_CASE("rank, kernel and cokernel against the reference elimination") {
    Rng rng(11);
    std::uniform_int_distribution<int> dim(0, 6);
    for (std::uint32_t p : {2u, 3u, 5u, 65521u})
        for (int trial = 0; trial < 150; ++trial) {
            int r = dim(rng), c = dim(rng);
            Matrix a = random_matrix(rng, r, c, p);
            if (trial % 3 == 0 && r > 1) {  // force dependent rows
                for (int j = 0; j < c; ++j) a.set(r - 1, j, a(0, j) * 2LL);
            }
            int rk = rank(a);
            CHECK(rk == oracle::rank(oracle::to_rows(a), p));

            Matrix k = kernel_basis(a);
            CHECK(k.rows() == c);
            CHECK(k.cols() == c - rk);
            if (r > 0 && k.cols() > 0) CHECK((a * k).is_zero());
            CHECK(rank(k) == k.cols());

            CokernelProjection q = cokernel_projector(a);
            CHECK(q.quotient_dim == r - rk);
            CHECK(q.projector.rows() == q.quotient_dim);
            CHECK(q.projector.cols() == r);
            if (q.quotient_dim > 0 && c > 0) CHECK((q.projector * a).is_zero());
            CHECK(rank(q.projector) == q.quotient_dim);

            Rref e = rref(a);
            CHECK(static_cast<int>(e.pivots.size()) == rk);
            for (std::size_t i = 0; i < e.pivots.size(); ++i) {
                CHECK(e.r(static_cast<int>(i), e.pivots[i]) == 1);
                for (int row = 0; row < e.r.rows(); ++row)
                    if (row != static_cast<int>(i)) CHECK(e.r(row, e.pivots[i]) == 0);
            }
        }
}

TEST_CASE("inverse and stacking") {
    Rng rng(5);
    for (std::uint32_t p : {2u, 7u})
        for (int n = 1; n <= 5; ++n) {
            Matrix a = random_invertible(rng, n, p);
            CHECK(a * inverse(a) == Matrix::identity(n, p));
            CHECK(inverse(a) * a == Matrix::identity(n, p));
            Matrix b = random_matrix(rng, n, 2, p);
            Matrix h = hstack(a, b);
            CHECK(h.cols() == n + 2);
            CHECK(select_rows(vstack(a, a), n, n) == a);
            Matrix d = block_diag(a, Matrix::identity(2, p));
            CHECK(rank(d) == n + 2);
            CHECK((a + a.negated()).is_zero());
            CHECK(a - a == Matrix::zero(n, n, p));
            CHECK(a.transpose().transpose() == a);
        }
}
