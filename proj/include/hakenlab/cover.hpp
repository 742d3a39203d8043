#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hakenlab/alexander.hpp"
#include "hakenlab/intlinalg.hpp"

namespace hakenlab {

/// One link of the bundled corpus: metadata plus whichever presentations
/// (Seifert and/or Goeritz) the diagram provides.
struct LinkRecord {
    std::string name;
    int components = 1;
    std::vector<std::vector<long>> linking;  // symmetric s x s, zero diagonal
    std::optional<IntMat> seifert;
    std::optional<IntMat> goeritz;
    std::optional<long> chiF;  // Euler characteristic of the Seifert surface of K_1
    std::optional<long> P;     // total geometric intersections of K_i (i>=2) with F_1
    int kappa = 1;             // branch components of the covers considered

    bool is_knot() const { return components == 1; }
    long total_linking_with_first() const;
    void validate() const;  // throws NotAKnot / MissingData / DimensionMismatch
};

/// H_1 of a cyclic branched cover as a cokernel with its deck action.
/// Invariants verified at construction: the action descends to the
/// cokernel, z^p acts as the identity, and the norm 1 + z + ... + z^{p-1}
/// kills the cokernel (base S^3).
class GaloisModule {
public:
    GaloisModule(IntMat presentation, IntMat action, int p, int kappa);

    const IntMat& presentation() const { return m_; }
    const IntMat& action() const { return z_; }
    int p() const { return p_; }
    int kappa() const { return kappa_; }
    const AbelianGroupInv& homology() const { return inv_; }
    IntMat norm() const;  // sum of powers of the action

private:
    IntMat m_, z_;
    int p_, kappa_;
    AbelianGroupInv inv_;
};

/// H_1 of the p-fold cyclic branched cover of a knot from its Seifert
/// matrix: presentation V (x) I - V^T (x) T over Z[t]/(1 + t + ... + t^{p-1}),
/// deck action I (x) T.  The cokernel order is cross-checked against
/// fox_order; any disagreement throws PresentationMismatch.
GaloisModule cyclic_cover_homology(const SeifertMatrix& v, int p);

/// H_1 of the double branched cover: coker(Goeritz) when a Goeritz matrix
/// is present, else coker(V + V^T) for knots.
AbelianGroupInv double_cover_homology(const LinkRecord& rec);

struct CpCohomology {
    int h0 = 0;  // log_p |fixed p-part|
    int h1 = 0;  // dim ker(norm) / im(1 - z)
    int h2 = 0;  // dim ker(1 - z) / im(norm)
};

/// Tate-style cohomology dimensions of the deck action on the finite
/// cokernel.  Throws InfiniteModule when b_1 > 0.
CpCohomology cp_cohomology_dims(const GaloisModule& w);

struct StructureReport {
    std::string name;
    int p = 0;
    int kappa = 1;
    bool applicable = false;  // a presentation for this p exists
    AbelianGroupInv homology;
    bool norm_zero = false;
    std::optional<CpCohomology> dims;  // absent when b_1 > 0
    bool pass = false;
    std::string detail;
};

/// Checks the cohomological consequences of the structure theory on one
/// record: norm annihilates H_1, h1 = h2 = kappa - 1, and for knots the
/// p-part of H_1(Sigma_p) is trivial with |H_1(Sigma_2)| odd.
StructureReport structure_check(const LinkRecord& rec, int p);

enum class RedeiVerdict { ConsistentA, ConsistentB, Violation };

struct RedeiReport {
    std::string name;
    int linking_parity = 0;
    AbelianGroupInv homology;
    RedeiVerdict verdict = RedeiVerdict::Violation;
    std::string detail;
};

/// Parity dichotomy for the double branched cover of a 2-component link:
/// odd linking forces H_1 = Z/2 exactly on the 2-part with b_1 = 0; even
/// linking forces b_1 > 0 or a cyclic 2-part Z/2^l with l >= 2.
RedeiReport redei_check(const LinkRecord& rec);

const char* to_string(RedeiVerdict v);

}  // namespace hakenlab
