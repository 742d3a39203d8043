#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hakenlab/euler.hpp"
#include "hakenlab/projective.hpp"

namespace hakenlab::testing {

/// Seed shared by all randomized tests; override with HAKENLAB_SEED.
inline unsigned long test_seed() {
    if (const char* env = std::getenv("HAKENLAB_SEED")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0x48414b454eUL;
}

/// Random element of SL_2(Q) as a short product of elementary matrices,
/// so the determinant is exactly 1 and entries stay small.
inline Mat2 random_sl2(std::mt19937_64& rng, int factors = 3, long max_num = 3) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    Mat2 m = Mat2::identity();
    for (int i = 0; i < factors; ++i) {
        Scalar t(num(rng), den(rng));
        switch (kind(rng)) {
            case 0: m = m * Mat2(Scalar(1), t, Scalar(0), Scalar(1)); break;
            case 1: m = m * Mat2(Scalar(1), Scalar(0), t, Scalar(1)); break;
            default: {
                Scalar u = t + Scalar(2);  // keep away from 0
                if (u.is_zero()) u = Scalar(2);
                m = m * Mat2(u, Scalar(0), Scalar(0), u.inverse());
            }
        }
    }
    return m;
}

inline ProjPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<int> inf(0, 9);
    if (inf(rng) == 0) return ProjPoint::infinity();
    return ProjPoint(Scalar(num(rng), den(rng)));
}

/// Random PairSystem whose commutator product is hyperbolic.
inline PairSystem random_hyperbolic_pairs(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<std::pair<Mat2, Mat2>> pairs;
        for (int i = 0; i < n; ++i)
            pairs.emplace_back(random_sl2(rng), random_sl2(rng));
        PairSystem ps(std::move(pairs));
        if (!ps.h().is_scalar() && ps.h().trace().abs() > Scalar(2)) return ps;
    }
}

}  // namespace hakenlab::testing
