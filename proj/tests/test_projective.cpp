#include <doctest.h>

#include <random>
#include <vector>

#include "hakenlab/projective.hpp"
#include "test_support.hpp"

using namespace hakenlab;

namespace {
ProjPoint pt(long n, long d = 1) { return ProjPoint(Scalar(n, d)); }
const ProjPoint inf = ProjPoint::infinity();
}  // namespace

TEST_CASE("det_pair examples") {
    CHECK(det_pair(pt(0), pt(1)) == Scalar(-1));
    CHECK(det_pair(pt(3, 2), pt(3, 2)).is_zero());
    CHECK(det_pair(inf, pt(42)) == Scalar(1));
    // antisymmetry on a sample
    CHECK(det_pair(pt(2), pt(5)) == -det_pair(pt(5), pt(2)));
}

TEST_CASE("psi fixes the standard orientation") {
    CHECK(psi(pt(0), pt(1), inf) == 1);
    CHECK(psi(pt(1), pt(0), inf) == -1);
    CHECK(psi(pt(7), pt(7), pt(1)) == 0);
    // finite rationals: sign of (x-y)(y-z)(z-x)
    CHECK(psi(pt(1), pt(2), pt(3)) == 1);
    CHECK(psi(pt(3), pt(2), pt(1)) == -1);
}

TEST_CASE("psi is a cyclic order on 5-element sets") {
    std::vector<std::vector<ProjPoint>> sets = {
        {pt(-2), pt(-1, 2), pt(0), pt(1, 3), pt(7)},
        {pt(-5), pt(0), pt(1), pt(2), inf},
        {pt(-1), pt(-1, 3), pt(2, 7), pt(5, 2), inf},
    };
    for (const auto& s : sets) {
        const int n = static_cast<int>(s.size());
        // (i) nonzero only on distinct triples, (ii) odd under transpositions
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int v = psi(s[a], s[b], s[c]);
                    if (a == b || b == c || a == c) {
                        CHECK(v == 0);
                        continue;
                    }
                    CHECK(v != 0);
                    CHECK(psi(s[b], s[a], s[c]) == -v);
                    CHECK(psi(s[a], s[c], s[b]) == -v);
                    CHECK(psi(s[c], s[b], s[a]) == -v);
                    CHECK(psi(s[b], s[c], s[a]) == v);  // cyclic
                }
        // (iii) pinning the last point induces a linear order on the rest
        for (int z = 0; z < n; ++z) {
            auto less = [&](int x, int y) { return psi(s[x], s[y], s[z]) == 1; };
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (x == z || y == z || x == y) continue;
                    CHECK(less(x, y) != less(y, x));  // totality + antisymmetry
                    for (int w = 0; w < n; ++w) {
                        if (w == z || w == x || w == y) continue;
                        if (less(x, y) && less(y, w)) CHECK(less(x, w));  // transitivity
                    }
                }
        }
    }
}

TEST_CASE("moebius action") {
    Mat2 id;
    CHECK(moebius_apply(id, pt(5, 3)) == pt(5, 3));
    Mat2 parabolic(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
    CHECK(moebius_apply(parabolic, inf) == inf);
    CHECK(moebius_apply(parabolic, pt(1)) == pt(2));

    std::mt19937_64 rng(testing::test_seed());
    for (int i = 0; i < 100; ++i) {
        Mat2 g = testing::random_sl2(rng);
        ProjPoint a = testing::random_point(rng);
        ProjPoint b = testing::random_point(rng);
        ProjPoint c = testing::random_point(rng);
        int before = psi(a, b, c);
        int after = psi(moebius_apply(g, a), moebius_apply(g, b), moebius_apply(g, c));
        CHECK(after == before);  // det g = 1 preserves the cyclic order
    }
    // negative determinant flips psi
    Mat2 refl(Scalar(1), Scalar(0), Scalar(0), Scalar(-1));
    CHECK(psi(moebius_apply(refl, pt(0)), moebius_apply(refl, pt(1)),
              moebius_apply(refl, inf)) == -1);
}

TEST_CASE("projective equality") {
    Mat2 g(Scalar(1), Scalar(2), Scalar(3), Scalar(7));
    Mat2 h(Scalar(-2), Scalar(-4), Scalar(-6), Scalar(-14));
    CHECK(g.projectively_equal(h));
    CHECK(!g.projectively_equal(Mat2::identity()));
}

TEST_CASE("fixed points of diagonal and parabolic maps") {
    Mat2 diag(Scalar(2), Scalar(0), Scalar(0), Scalar(1, 2));
    FixedPoints fp = fixed_points(diag);
    CHECK(fp.cls == IsomClass::Hyperbolic);
    REQUIRE(fp.points.size() == 2);
    CHECK(((fp.points[0] == inf && fp.points[1] == pt(0)) ||
           (fp.points[0] == pt(0) && fp.points[1] == inf)));

    Mat2 parabolic(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
    fp = fixed_points(parabolic);
    CHECK(fp.cls == IsomClass::Parabolic);
    REQUIRE(fp.points.size() == 1);
    CHECK(fp.points[0] == inf);

    Mat2 rot(Scalar(0), Scalar(-1), Scalar(1), Scalar(0));
    fp = fixed_points(rot);
    CHECK(fp.cls == IsomClass::Elliptic);
    CHECK(fp.points.empty());
}

TEST_CASE("fixed points in a quadratic extension") {
    Mat2 g(Scalar(2), Scalar(1), Scalar(1), Scalar(1));  // trace 3
    CHECK_THROWS_AS(fixed_points(g), IrrationalSpectrum);
    try {
        fixed_points(g);
    } catch (const IrrationalSpectrum& e) {
        CHECK(e.needed_sqrt == "5");
    }
    FixedPoints fp = fixed_points(g, /*extend=*/true);
    CHECK(fp.cls == IsomClass::Hyperbolic);
    REQUIRE(fp.points.size() == 2);
    // Fixed points solve x^2 - x - 1 = 0: x = (1 +/- sqrt 5)/2.
    for (const auto& p : fp.points) {
        Scalar x = p.value();
        CHECK(x * x - x - Scalar(1) == Scalar(0));
    }
    CHECK(fp.points[0] != fp.points[1]);
}

TEST_CASE("reflection in the eigenbasis") {
    Mat2 diag(Scalar(3), Scalar(0), Scalar(0), Scalar(1, 3));
    Mat2 r = reflection_in_eigenbasis(diag);
    CHECK(r == Mat2(Scalar(1), Scalar(0), Scalar(0), Scalar(-1)));

    Mat2 g(Scalar(2), Scalar(1), Scalar(1), Scalar(1));
    Mat2 rg = reflection_in_eigenbasis(g);
    CHECK(rg.det() == Scalar(-1));
    CHECK((rg * rg).is_identity());
    CHECK(rg * g == g * rg);
    CHECK((rg * g * rg.inverse()) == g);

    Mat2 parabolic(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
    CHECK_THROWS_AS(reflection_in_eigenbasis(parabolic), NotHyperbolic);
}
