#pragma once

#include <random>

#include "hopfrob/linsolve.hpp"
#include "hopfrob/matrix.hpp"

namespace hopfrob::testing {

// Deterministic generators for property tests; every suite seeds its own instance.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

    Rational rational(int bound = 9) { return Rational(integer(-bound, bound), integer(1, bound)); }

    // Occasionally draws wide numerators so the mpq path is exercised.
    Rational wide_rational() {
        if (!coin(0.2)) return rational();
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(-(1ll << 62), 1ll << 62)(rng);
        std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 1ll << 61)(rng);
        return Rational(n, d);
    }

    Scalar cyclotomic(int N, double sparsity = 0.3) {
        Scalar s(0);
        for (int k = 0; k < N; ++k)
            if (!coin(sparsity)) s += Scalar(wide_rational()) * Scalar::zeta(N, k);
        return s;
    }

    Scalar nonzero(int N) {
        for (;;) {
            Scalar s = cyclotomic(N);
            if (!s.is_zero()) return s;
        }
    }

    Matrix matrix(int rows, int cols, int N = 1, double density = 0.5) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (coin(density)) m.set(i, j, N == 1 ? Scalar(rational()) : cyclotomic(N));
        return m;
    }

    Matrix invertible(int n, int N = 1) {
        for (;;) {
            Matrix m = matrix(n, n, N, 0.7);
            if (rank(m) == n) return m;
        }
    }
};

}  // namespace hopfrob::testing
