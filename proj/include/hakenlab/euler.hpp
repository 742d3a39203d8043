#pragma once

#include <utility>
#include <vector>

#include "hakenlab/projective.hpp"

namespace hakenlab {

/// Basepoint for one evaluation of the cocycle ell.  The cohomology class
/// does not depend on it; tests change it freely.
struct CocycleContext {
    ProjPoint basepoint = ProjPoint::infinity();
};

/// ell(g1, g2) = psi(p, g1 p, g1 g2 p).  Values in {-1, 0, +1}; well defined
/// on projective classes; satisfies the cocycle identity
/// ell(g2,g3) - ell(g1 g2, g3) + ell(g1, g2 g3) - ell(g1, g2) = 0 exactly.
int ell(const Mat2& g1, const Mat2& g2, const CocycleContext& ctx = {});

enum class RelationStatus { ExactSL, ExactPSL, None };

/// Genus-g tuple of SL_2 generator pairs (x_i, y_i).  The surface-relation
/// status is recomputed from the entries at construction, never trusted.
class SurfaceTuple {
public:
    explicit SurfaceTuple(std::vector<std::pair<Mat2, Mat2>> pairs);

    int genus() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<Mat2, Mat2>>& pairs() const { return pairs_; }
    RelationStatus relation() const { return relation_; }
    /// Partial products I_j = [x_1,y_1] ... [x_j,y_j]; I_0 = identity.
    const Mat2& partial_product(int j) const { return partials_[static_cast<size_t>(j)]; }
    const Mat2& relation_product() const { return partials_.back(); }

private:
    std::vector<std::pair<Mat2, Mat2>> pairs_;
    std::vector<Mat2> partials_;
    RelationStatus relation_;
};

/// Euler number of the representation: pairing of the cocycle ell against
/// the standard fundamental cycle
///   sum_j (I_{j-1} | x_j) + (I_{j-1} x_j | y_j)
///         - (I_{j-1} x_j y_j x_j^{-1} | x_j) - (I_j | y_j).
/// Requires the relation to hold exactly in SL or PSL; the result is an
/// integer independent of the basepoint and of simultaneous conjugation by
/// positive-determinant matrices.
int euler_number(const SurfaceTuple& t, const CocycleContext& ctx = {});

/// Milnor-Wood bound for the implemented normalization.
inline int max_euler_number(int genus) { return 2 * genus - 2; }

/// n pairs (a_i, b_i) in SL_2 with derived commutator product h.
class PairSystem {
public:
    explicit PairSystem(std::vector<std::pair<Mat2, Mat2>> pairs);

    int n() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<Mat2, Mat2>>& pairs() const { return pairs_; }
    const Mat2& h() const { return h_; }

private:
    std::vector<std::pair<Mat2, Mat2>> pairs_;
    Mat2 h_;
};

/// Doubles n pairs with hyperbolic h into a genus-2n surface tuple:
/// pairs n+1..2n are (r b_{2n+1-i} r^{-1}, r a_{2n+1-i} r^{-1}) with r the
/// +1/-1 reflection commuting with h.  The relation closes exactly.
SurfaceTuple double_tuple(const PairSystem& ps);

/// Euler number of the doubled tuple.
int f_invariant(const PairSystem& ps);

enum class Verdict { CertifiedFreeDiscrete, Unknown };

struct Certificate {
    Verdict verdict;
    int euler;
    int max_euler;  // for the doubled genus
};

/// One-sided certificate: CertifiedFreeDiscrete iff |f_invariant| reaches
/// the genus-2n maximum.  Unknown never asserts non-discreteness.
Certificate certify_free_discrete(const PairSystem& ps);

/// Conjugates the pairs after index kappa by the reflection r of
/// gamma = I_kappa.  Involutive (r^2 = I exactly) and relation-preserving
/// since r commutes with gamma.
///
/// The Euler number transforms as e -> e_head - e_tail, where e_head and
/// e_tail are the two sides' relative contributions across the separating
/// curve: r has determinant -1, so conjugating one side reverses that
/// side's contribution.  In particular e is unchanged exactly when the
/// tail contributes zero; mirror-doubled tuples (equal halves) always land
/// on e = 0.  No involutive conjugation twist can do better: an involutive
/// positive-determinant conjugator commuting with a hyperbolic gamma is
/// +/- identity.
SurfaceTuple goldman_discrete_twist(const SurfaceTuple& t, int kappa);

}  // namespace hakenlab
