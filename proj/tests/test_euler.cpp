#include <doctest.h>

#include <random>

#include "hakenlab/euler.hpp"
#include "hakenlab/pingpong.hpp"
#include "test_support.hpp"

using namespace hakenlab;
using namespace hakenlab::testing;

namespace {

Mat2 diag(long n1, long d1, long n2, long d2) {
    return Mat2(Scalar(n1, d1), Scalar(0), Scalar(0), Scalar(n2, d2));
}

// Crossing-axes Fuchsian pair: doubles to a maximal genus-2 tuple.
PairSystem calibration_pair() {
    Mat2 a = diag(9, 1, 1, 9);
    Mat2 c(Scalar(1), Scalar(-1), Scalar(1), Scalar(1));
    Mat2 b = c * diag(9, 1, 1, 9) * c.inverse();
    return PairSystem({{a, b}});
}

// Separated-axes Schottky pair: free and discrete but pants-type.
PairSystem separated_pair() {
    Mat2 a = diag(9, 1, 1, 9);
    Mat2 c(Scalar(1), Scalar(1), Scalar(1), Scalar(2));
    Mat2 b = c * diag(9, 1, 1, 9) * c.inverse();
    return PairSystem({{a, b}});
}

}  // namespace

TEST_CASE("ell basics") {
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 50; ++i) {
        Mat2 g = random_sl2(rng);
        CHECK(ell(Mat2::identity(), g) == 0);
    }
    // both upper triangular, basepoint at infinity: every psi argument is inf
    Mat2 u1(Scalar(2), Scalar(3), Scalar(0), Scalar(1, 2));
    Mat2 u2(Scalar(1), Scalar(-1), Scalar(0), Scalar(1));
    CHECK(ell(u1, u2) == 0);
    // well defined on projective classes
    Mat2 g1 = random_sl2(rng), g2 = random_sl2(rng);
    CocycleContext ctx{ProjPoint(Scalar(1, 3))};
    CHECK(ell(g1, g2, ctx) == ell(-g1, g2, ctx));
    CHECK(ell(g1, g2, ctx) == ell(g1, -g2, ctx));
}

TEST_CASE("ell satisfies the cocycle identity") {
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 2000; ++i) {
        Mat2 g1 = random_sl2(rng), g2 = random_sl2(rng), g3 = random_sl2(rng);
        CocycleContext ctx{random_point(rng)};
        int delta = ell(g2, g3, ctx) - ell(g1 * g2, g3, ctx) + ell(g1, g2 * g3, ctx) -
                    ell(g1, g2, ctx);
        REQUIRE(delta == 0);
    }
}

TEST_CASE("surface tuple relation status is recomputed") {
    Mat2 x = diag(2, 1, 1, 2);
    Mat2 y = diag(3, 1, 1, 3);
    SurfaceTuple commuting({{x, y}, {x, y}});
    CHECK(commuting.relation() == RelationStatus::ExactSL);

    std::mt19937_64 rng(test_seed());
    SurfaceTuple broken({{random_sl2(rng, 4), random_sl2(rng, 4)}});
    // a random genus-1 pair essentially never satisfies the relation
    CHECK(broken.relation() == RelationStatus::None);
    CHECK_THROWS_AS(euler_number(broken), RelationViolated);
}

TEST_CASE("euler number of trivial and commuting tuples is zero") {
    std::vector<std::pair<Mat2, Mat2>> ids(2, {Mat2::identity(), Mat2::identity()});
    CHECK(euler_number(SurfaceTuple(ids)) == 0);

    Mat2 x = diag(2, 1, 1, 2), y = diag(5, 3, 3, 5);
    SurfaceTuple diag_tuple({{x, y}, {y, x}});
    for (auto p : {ProjPoint::infinity(), ProjPoint(Scalar(0)), ProjPoint(Scalar(2)),
                   ProjPoint(Scalar(-1, 3))})
        CHECK(euler_number(diag_tuple, {p}) == 0);
}

TEST_CASE("doubling closes the relation exactly") {
    // trace of [a,b] must be checked hyperbolic before doubling
    Mat2 a = diag(3, 1, 1, 3);
    Mat2 b(Scalar(2), Scalar(1), Scalar(1), Scalar(1));
    PairSystem ps({{a, b}});
    CHECK(ps.h().trace().abs() > Scalar(2));
    SurfaceTuple doubled = double_tuple(ps);
    CHECK(doubled.genus() == 2);
    CHECK(doubled.relation() == RelationStatus::ExactSL);

    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 25; ++i) {
        int n = 1 + (i % 3);
        PairSystem sys = random_hyperbolic_pairs(rng, n);
        SurfaceTuple d = double_tuple(sys);
        CHECK(d.genus() == 2 * n);
        CHECK(d.relation() == RelationStatus::ExactSL);
        // the doubled half consists of r-conjugates: entries may live in a
        // quadratic extension but determinants stay exactly 1
        for (const auto& [x, y] : d.pairs()) {
            CHECK(x.is_sl());
            CHECK(y.is_sl());
        }
    }
}

TEST_CASE("doubling errors") {
    // h = I for a = b
    Mat2 a(Scalar(2), Scalar(1), Scalar(1), Scalar(1));
    CHECK_THROWS_AS(double_tuple(PairSystem({{a, a}})), NotHyperbolic);
    // parabolic commutator: x upper parabolic, y diagonal
    Mat2 x(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
    Mat2 y = diag(3, 1, 1, 3);
    PairSystem parab({{x, y}});
    CHECK(commutator(x, y).trace() == Scalar(2));
    CHECK_THROWS_AS(double_tuple(parab), NotHyperbolic);
    CHECK_THROWS_AS(f_invariant(parab), NotHyperbolic);
}

TEST_CASE("calibration: certified crossing pair doubles to maximal euler") {
    PairSystem ps = calibration_pair();
    CHECK(ps.h().trace() < Scalar(-2));  // axes cross
    Certificate cert = certify_free_discrete(ps);
    CHECK(cert.max_euler == 2);
    CHECK(std::abs(cert.euler) == 2);
    CHECK(cert.verdict == Verdict::CertifiedFreeDiscrete);
    CHECK(pingpong_oracle(ps).verdict == Verdict::CertifiedFreeDiscrete);
}

TEST_CASE("separated Schottky pair: oracle certifies, certificate stays unknown") {
    // Free and discrete, but of pants type: the double is not maximal.
    // Theorem-level consistency is one-sided, so Unknown is the correct
    // certificate verdict here.
    PairSystem ps = separated_pair();
    CHECK(ps.h().trace() > Scalar(2));
    Certificate cert = certify_free_discrete(ps);
    CHECK(cert.euler == 0);
    CHECK(cert.verdict == Verdict::Unknown);
    CHECK(pingpong_oracle(ps).verdict == Verdict::CertifiedFreeDiscrete);
}

TEST_CASE("euler number is basepoint and conjugation invariant") {
    std::mt19937_64 rng(test_seed());
    std::vector<ProjPoint> basepoints = {ProjPoint::infinity(), ProjPoint(Scalar(0)),
                                         ProjPoint(Scalar(1)), ProjPoint(Scalar(-2)),
                                         ProjPoint(Scalar(5, 3)), ProjPoint(Scalar(-7, 2))};
    for (int i = 0; i < 12; ++i) {
        PairSystem ps = random_hyperbolic_pairs(rng, 1 + (i % 2));
        SurfaceTuple t = double_tuple(ps);
        int e = euler_number(t);
        for (const auto& p : basepoints) CHECK(euler_number(t, {p}) == e);
        for (int c = 0; c < 4; ++c) {
            Mat2 g = random_sl2(rng, 4);
            std::vector<std::pair<Mat2, Mat2>> conj;
            for (const auto& [x, y] : t.pairs())
                conj.emplace_back(g * x * g.inverse(), g * y * g.inverse());
            CHECK(euler_number(SurfaceTuple(conj)) == e);
        }
        // conjugation by a negative-determinant matrix reverses orientation
        Mat2 refl(Scalar(1), Scalar(0), Scalar(0), Scalar(-1));
        std::vector<std::pair<Mat2, Mat2>> flipped;
        for (const auto& [x, y] : t.pairs())
            flipped.emplace_back(refl * x * refl.inverse(), refl * y * refl.inverse());
        CHECK(euler_number(SurfaceTuple(flipped)) == -e);
    }
}

TEST_CASE("milnor-wood bound on doubled systems") {
    std::mt19937_64 rng(test_seed() + 1);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + (i % 3);
        PairSystem ps = random_hyperbolic_pairs(rng, n);
        int e = f_invariant(ps);
        CHECK(std::abs(e) <= max_euler_number(2 * n));
    }
}

TEST_CASE("PSL relation tuple: commutator squares to minus identity") {
    Mat2 x(Scalar(-2), Scalar(-2), Scalar(-1), Scalar(-3, 2));
    Mat2 y(Scalar(2), Scalar(-2), Scalar(-1), Scalar(3, 2));
    Mat2 k = commutator(x, y);
    REQUIRE(k.trace().is_zero());  // k^2 = -I by Cayley-Hamilton
    SurfaceTuple t({{x, y}, {x, y}});
    REQUIRE(t.relation() == RelationStatus::ExactPSL);
    int e = euler_number(t);
    CHECK(std::abs(e) <= max_euler_number(2));
    for (auto p : {ProjPoint(Scalar(2)), ProjPoint(Scalar(-1, 3)), ProjPoint::infinity()})
        CHECK(euler_number(t, {p}) == e);
}

TEST_CASE("goldman twist: explicit diagonal formula") {
    // I_1 diagonal hyperbolic: r = diag(1,-1) flips off-diagonal signs.
    Mat2 a = diag(3, 1, 1, 3);
    Mat2 b(Scalar(2), Scalar(1), Scalar(1), Scalar(1));
    PairSystem ps({{a, b}});
    SurfaceTuple t = double_tuple(ps);
    // gamma = I_1 = [a, b]; make a diagonal-gamma fixture instead:
    Mat2 x1(Scalar(2), Scalar(3), Scalar(1), Scalar(2));
    Mat2 y1 = diag(2, 1, 1, 2);
    // build genus-2 tuple whose I_1 is diagonal: pair (y1, x1) has
    // commutator with no special form, so use a doubled diagonal-h system.
    PairSystem diag_sys({{x1, y1}});
    CHECK(!diag_sys.h().is_scalar());
    if (diag_sys.h().trace().abs() > Scalar(2)) {
        SurfaceTuple d = double_tuple(diag_sys);
        SurfaceTuple tw = goldman_discrete_twist(d, 1);
        CHECK(tw.relation() == d.relation());
    }
    // involution on the generic doubled tuple
    SurfaceTuple tw = goldman_discrete_twist(t, 1);
    SurfaceTuple tw2 = goldman_discrete_twist(tw, 1);
    for (int j = 0; j < t.genus(); ++j) {
        CHECK(tw2.pairs()[size_t(j)].first == t.pairs()[size_t(j)].first);
        CHECK(tw2.pairs()[size_t(j)].second == t.pairs()[size_t(j)].second);
    }
}

TEST_CASE("goldman twist transformation law on doubled tuples") {
    // Mirror doubles split e evenly across the separating curve, so the
    // twist at kappa = n lands on e_head - e_tail = 0; e = 0 doubles are
    // genuinely invariant.
    PairSystem cal = calibration_pair();
    SurfaceTuple d = double_tuple(cal);
    REQUIRE(std::abs(euler_number(d)) == 2);
    SurfaceTuple tw = goldman_discrete_twist(d, 1);
    CHECK(tw.relation() == RelationStatus::ExactSL);
    CHECK(euler_number(tw) == 0);

    PairSystem sep = separated_pair();
    SurfaceTuple d0 = double_tuple(sep);
    REQUIRE(euler_number(d0) == 0);
    CHECK(euler_number(goldman_discrete_twist(d0, 1)) == 0);

    std::mt19937_64 rng(test_seed() + 2);
    for (int i = 0; i < 10; ++i) {
        PairSystem ps = random_hyperbolic_pairs(rng, 2);
        SurfaceTuple t = double_tuple(ps);
        int e = euler_number(t);
        SurfaceTuple tw2 = goldman_discrete_twist(t, 2);  // split at the mirror
        CHECK(euler_number(tw2) == 0);
        // at other kappa the head/tail split varies; the twisted value
        // still obeys Milnor-Wood
        for (int kappa = 1; kappa < t.genus(); ++kappa) {
            int twisted = 0;
            bool computed = false;
            try {
                twisted = euler_number(goldman_discrete_twist(t, kappa));
                computed = true;
            } catch (const NotHyperbolic&) {
            } catch (const IrrationalSpectrum&) {
            }
            if (computed) CHECK(std::abs(twisted) <= max_euler_number(t.genus()));
        }
    }
}

TEST_CASE("goldman twist errors") {
    PairSystem ps = calibration_pair();
    SurfaceTuple t = double_tuple(ps);
    CHECK_THROWS_AS(goldman_discrete_twist(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(goldman_discrete_twist(t, 2), std::invalid_argument);

    // non-hyperbolic separating curve: commuting pair makes I_1 = identity
    Mat2 x = diag(2, 1, 1, 2), y = diag(3, 1, 1, 3);
    SurfaceTuple commuting({{x, y}, {y, x}});
    CHECK_THROWS_AS(goldman_discrete_twist(commuting, 1), NotHyperbolic);
}
