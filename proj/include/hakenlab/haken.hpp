#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hakenlab/errors.hpp"

namespace hakenlab {

/// Inputs for the virtually-Haken threshold of a p-fold branched cover:
/// branching prime p, auxiliary prime q != p, Euler characteristic of the
/// Seifert surface F_1, total intersection count P, and dim H_1(N, F_q).
struct BranchProfile {
    int p = 2;
    int q = 3;
    long chiF = 1;
    long P = 0;
    long dimH1q = 0;

    void validate() const {
        if (p < 2 || q < 2 || p == q)
            throw DimensionMismatch("branch profile needs distinct primes p != q");
        if (chiF > 1) throw DimensionMismatch("chi(F) cannot exceed 1 for a Seifert surface");
        if (P < 0) throw DimensionMismatch("P must be nonnegative");
    }
};

enum class HakenVerdict { CertifiedVirtuallyHaken, Inconclusive };

struct HakenReport {
    HakenVerdict verdict;
    long threshold;  // 4 - p (chiF - 2) + (p - 1) P
    long dim;
    std::string source;  // "computed" | "manual"
};

/// Threshold test: certified when dim H_1(N, F_q) >= 4 - p(chiF - 2) + (p-1)P.
/// The verdict certifies the hypothesis arithmetic of the underlying
/// homology-growth criterion, not the topology itself.
HakenReport haken_threshold(const BranchProfile& bp, const std::string& source = "manual");

/// Generator count for the preimage surface: 2 - chiF * p + (p-1) P + 2p.
long generator_bound(int p, long chiF, long P);

/// Generators of a union along p components: r1 + r2 + (p - 1).
long amalgam_bound(long r1, long r2, long p);

/// True when b_1(M, F_q) >= g + 2 certifies an injective surface.
bool domination_threshold(long genus, long b1q);

/// 2g x r rational matrix whose columns span a candidate isotropic image in
/// the standard symplectic Z^2g.
struct SymplecticMap {
    int genus = 0;
    std::vector<std::vector<mpq_class>> b;  // 2g rows, r columns

    int rows() const { return static_cast<int>(b.size()); }
    int cols() const { return b.empty() ? 0 : static_cast<int>(b[0].size()); }
};

struct LagrangianReport {
    bool isotropic;               // B^T J B == 0 exactly
    int rank;                     // rank of B over Q (when isotropic)
    std::optional<std::pair<int, int>> witness;  // violating column pair otherwise
};

/// Checks B^T J B = 0 exactly; under that hypothesis the rank cannot exceed
/// g, and the rank is returned for the caller to assert.  A nonzero pairing
/// yields the witnessing column pair instead.
LagrangianReport lagrangian_rank_check(const SymplecticMap& m);

}  // namespace hakenlab
