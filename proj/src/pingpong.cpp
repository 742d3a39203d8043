#include "hakenlab/pingpong.hpp"

namespace hakenlab {

namespace {

bool in_open_arc(const ProjPoint& x, const Arc& a) { return psi(a.s, x, a.t) == 1; }

bool in_closed_arc(const ProjPoint& x, const Arc& a) {
    return x == a.s || x == a.t || in_open_arc(x, a);
}

bool arcs_disjoint(const Arc& a, const Arc& b) {
    return !in_closed_arc(b.s, a) && !in_closed_arc(b.t, a) && !in_closed_arc(a.s, b) &&
           !in_closed_arc(a.t, b);
}

struct GeneratorData {
    Mat2 g;
    ProjPoint repelling, attracting;
    Mat2 to_axis_inv;  // inverse of the chart sending repelling -> 0, attracting -> inf
};

/// Chart matrix sending p -> 0 and q -> inf.
Mat2 axis_chart(const ProjPoint& p, const ProjPoint& q) {
    return Mat2(p.coord_b(), -p.coord_a(), q.coord_b(), -q.coord_a());
}

/// Eigenvalue of g on the eigenline of the fixed point p.
Scalar eigenvalue_at(const Mat2& g, const ProjPoint& p) {
    Scalar va = p.coord_a(), vb = p.coord_b();
    Scalar wa = g.a() * va + g.b() * vb;
    Scalar wb = g.c() * va + g.d() * vb;
    return vb.is_zero() ? wa / va : wb / vb;
}

/// Arc around `center` built from chart preimages of [-w, w] (or of
/// {|z| >= 1/w} when around_infinity).  Ends are swapped if needed so the
/// positive arc s -> t contains the center.
Arc arc_around(const GeneratorData& gen, const Scalar& w, bool around_infinity,
               const ProjPoint& center) {
    ProjPoint lo, hi;
    if (around_infinity) {
        lo = moebius_apply(gen.to_axis_inv, ProjPoint(w.inverse()));
        hi = moebius_apply(gen.to_axis_inv, ProjPoint(-(w.inverse())));
    } else {
        lo = moebius_apply(gen.to_axis_inv, ProjPoint(-w));
        hi = moebius_apply(gen.to_axis_inv, ProjPoint(w));
    }
    Arc arc{lo, hi};
    if (!in_open_arc(center, arc)) arc = Arc{hi, lo};
    return arc;
}

}  // namespace

PingPongResult pingpong_oracle(const PairSystem& ps) {
    std::vector<GeneratorData> gens;
    mpz_class ambient = 0;
    for (const auto& [a, b] : ps.pairs())
        for (const Mat2* g : {&a, &b}) {
            mpz_class d = g->radicand();
            if (d != 0) {
                if (ambient != 0 && ambient != d)
                    return {Verdict::Unknown, std::nullopt, "generators mix radicands"};
                ambient = d;
            }
        }

    for (const auto& [a, b] : ps.pairs())
        for (const Mat2* g : {&a, &b}) {
            FixedPoints fp;
            try {
                fp = fixed_points(*g, /*extend=*/g->radicand() == 0);
            } catch (const IrrationalSpectrum& e) {
                return {Verdict::Unknown, std::nullopt,
                        std::string("fixed points escape the active field: ") + e.what()};
            }
            if (fp.cls != IsomClass::Hyperbolic)
                return {Verdict::Unknown, std::nullopt, "generator is not hyperbolic"};
            for (const auto& pt : fp.points) {
                const mpz_class& d = pt.coord_a().radicand();
                if (d != 0) {
                    if (ambient != 0 && ambient != d)
                        return {Verdict::Unknown, std::nullopt, "fixed points mix radicands"};
                    ambient = d;
                }
            }
            GeneratorData data;
            data.g = *g;
            Scalar lambda0 = eigenvalue_at(*g, fp.points[0]);
            bool first_attracts = lambda0.abs() > Scalar(1);
            data.attracting = first_attracts ? fp.points[0] : fp.points[1];
            data.repelling = first_attracts ? fp.points[1] : fp.points[0];
            data.to_axis_inv = axis_chart(data.repelling, data.attracting).inverse();
            gens.push_back(std::move(data));
        }

    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i].repelling == gens[j].repelling ||
                gens[i].repelling == gens[j].attracting ||
                gens[i].attracting == gens[j].repelling ||
                gens[i].attracting == gens[j].attracting)
                return {Verdict::Unknown, std::nullopt, "generators share fixed points"};

    for (int level = 0; level < 16; ++level) {
        Scalar w = Scalar(1, 1L << level);
        std::vector<Arc> arcs;
        for (const auto& gen : gens) {
            arcs.push_back(arc_around(gen, w, false, gen.repelling));
            arcs.push_back(arc_around(gen, w, true, gen.attracting));
        }
        bool ok = true;
        for (size_t i = 0; i < arcs.size() && ok; ++i)
            for (size_t j = i + 1; j < arcs.size() && ok; ++j)
                if (!arcs_disjoint(arcs[i], arcs[j])) ok = false;
        if (!ok) continue;

        // Mapping condition: image of the complement of the repelling arc
        // interior is the positive arc [g(r.t), g(r.s)]; it must land
        // strictly inside the attracting arc.
        for (size_t gi = 0; gi < gens.size() && ok; ++gi) {
            const Arc& rep = arcs[2 * gi];
            const Arc& att = arcs[2 * gi + 1];
            ProjPoint u = moebius_apply(gens[gi].g, rep.t);
            ProjPoint v = moebius_apply(gens[gi].g, rep.s);
            if (!(in_open_arc(u, att) && in_open_arc(v, att) && psi(att.s, u, v) == 1))
                ok = false;
        }
        if (!ok) continue;

        return {Verdict::CertifiedFreeDiscrete, PingPongTable{std::move(arcs), level},
                "ping-pong arcs verified at dyadic level " + std::to_string(level)};
    }
    return {Verdict::Unknown, std::nullopt, "no dyadic arc size certified"};
}

}  // namespace hakenlab
