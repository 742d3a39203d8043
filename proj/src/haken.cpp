#include "hakenlab/haken.hpp"

namespace hakenlab {

HakenReport haken_threshold(const BranchProfile& bp, const std::string& source) {
    bp.validate();
    long t = 4 - bp.p * (bp.chiF - 2) + (bp.p - 1) * bp.P;
    HakenVerdict v = bp.dimH1q >= t ? HakenVerdict::CertifiedVirtuallyHaken
                                    : HakenVerdict::Inconclusive;
    return HakenReport{v, t, bp.dimH1q, source};
}

long generator_bound(int p, long chiF, long P) { return 2 - chiF * p + (p - 1) * P + 2 * p; }

long amalgam_bound(long r1, long r2, long p) {
    if (r1 < 0 || r2 < 0 || p < 1)
        throw DimensionMismatch("amalgam bound needs r1, r2 >= 0 and p >= 1");
    return r1 + r2 + p - 1;
}

bool domination_threshold(long genus, long b1q) {
    if (genus < 0) throw DimensionMismatch("genus must be nonnegative");
    return b1q >= genus + 2;
}

LagrangianReport lagrangian_rank_check(const SymplecticMap& m) {
    int rows = m.rows();
    if (rows % 2 != 0) throw DimensionMismatch("symplectic space needs even dimension");
    int g = rows / 2;
    if (m.genus != g) throw DimensionMismatch("genus does not match the matrix height");
    int r = m.cols();
    for (const auto& row : m.b)
        if (static_cast<int>(row.size()) != r) throw DimensionMismatch("ragged matrix");

    // J B with J = [[0, I], [-I, 0]]: (J B)_i = B_{g+i}, (J B)_{g+i} = -B_i.
    auto jb = [&](int i, int j) -> mpq_class {
        return i < g ? m.b[size_t(g + i)][size_t(j)] : -m.b[size_t(i - g)][size_t(j)];
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            mpq_class pairing = 0;
            for (int k = 0; k < rows; ++k) pairing += m.b[size_t(k)][size_t(i)] * jb(k, j);
            if (pairing != 0) return LagrangianReport{false, 0, std::make_pair(i, j)};
        }

    // Rank over Q by Gaussian elimination.
    std::vector<std::vector<mpq_class>> a = m.b;
    int rank = 0;
    for (int col = 0; col < r && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[size_t(i)][size_t(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[size_t(rank)], a[size_t(pivot)]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[size_t(i)][size_t(col)] == 0) continue;
            mpq_class f = a[size_t(i)][size_t(col)] / a[size_t(rank)][size_t(col)];
            for (int j = col; j < r; ++j)
                a[size_t(i)][size_t(j)] -= f * a[size_t(rank)][size_t(j)];
        }
        ++rank;
    }
    return LagrangianReport{true, rank, std::nullopt};
}

}  // namespace hakenlab
