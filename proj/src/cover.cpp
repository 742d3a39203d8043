#include "hakenlab/cover.hpp"

#include <sstream>

namespace hakenlab {

long LinkRecord::total_linking_with_first() const {
    long sum = 0;
    for (int i = 1; i < components; ++i) sum += linking[size_t(i)][0];
    return sum;
}

void LinkRecord::validate() const {
    if (components < 1) throw MissingData(name + ": component count must be >= 1");
    if (static_cast<int>(linking.size()) != components)
        throw DimensionMismatch(name + ": linking matrix size != component count");
    for (int i = 0; i < components; ++i) {
        if (static_cast<int>(linking[size_t(i)].size()) != components)
            throw DimensionMismatch(name + ": linking matrix is not square");
        for (int j = 0; j < components; ++j)
            if (linking[size_t(i)][size_t(j)] != linking[size_t(j)][size_t(i)])
                throw DimensionMismatch(name + ": linking matrix is not symmetric");
    }
    if (!seifert && !goeritz)
        throw MissingData(name + ": need a Seifert or Goeritz matrix");
    if (seifert && is_knot()) SeifertMatrix check(*seifert);  // throws NotAKnot
    if (P) {
        long bound = std::abs(total_linking_with_first());
        if (*P < bound)
            throw DimensionMismatch(name + ": P below the total linking number with K_1");
    }
    if (kappa < 1 || kappa > components)
        throw DimensionMismatch(name + ": kappa outside [1, components]");
}

GaloisModule::GaloisModule(IntMat presentation, IntMat action, int p, int kappa)
    : m_(std::move(presentation)), z_(std::move(action)), p_(p), kappa_(kappa) {
    int dim = m_.rows();
    if (z_.rows() != dim || z_.cols() != dim)
        throw DimensionMismatch("deck action shape does not match the presentation");
    inv_ = smith(m_);
    if (dim == 0) return;
    if (!columns_in_lattice(m_, z_ * m_))
        throw PresentationMismatch("deck action does not preserve the relation lattice");
    IntMat id = IntMat::identity(dim);
    if (!columns_in_lattice(m_, z_.pow(p_) - id))
        throw PresentationMismatch("deck action is not of order p on the cokernel");
    if (!columns_in_lattice(m_, norm()))
        throw PresentationMismatch("norm of the deck action does not annihilate H_1");
}

IntMat GaloisModule::norm() const {
    int dim = z_.rows();
    IntMat acc(dim, dim);
    IntMat power = IntMat::identity(dim);
    for (int i = 0; i < p_; ++i) {
        acc = acc + power;
        power = power * z_;
    }
    return acc;
}

GaloisModule cyclic_cover_homology(const SeifertMatrix& v, int p) {
    if (p < 2 || p > 13) throw std::invalid_argument("cover degree p must be in [2, 13]");
    const IntMat& vm = v.matrix();
    IntMat vt = vm.transpose();
    int g2 = vm.rows();
    int blocks = p - 1;
    int dim = g2 * blocks;

    // Multiplication by t on Z[t]/(1 + t + ... + t^{p-1}), basis 1..t^{p-2}.
    IntMat tmul(blocks, blocks);
    for (int k = 0; k + 1 < blocks; ++k) tmul.at(k + 1, k) = 1;
    for (int k = 0; k < blocks; ++k) tmul.at(k, blocks - 1) -= 1;

    // Presentation V (x) I - V^T (x) T; deck action I (x) T.
    IntMat pres(dim, dim), action(dim, dim);
    for (int bi = 0; bi < blocks; ++bi)
        for (int bj = 0; bj < blocks; ++bj) {
            for (int i = 0; i < g2; ++i)
                for (int j = 0; j < g2; ++j) {
                    mpz_class value = 0;
                    if (bi == bj) value += vm.at(i, j);
                    value -= vt.at(i, j) * tmul.at(bi, bj);
                    if (value != 0) pres.at(bi * g2 + i, bj * g2 + j) = value;
                }
            if (tmul.at(bi, bj) != 0)
                for (int i = 0; i < g2; ++i)
                    action.at(bi * g2 + i, bj * g2 + i) = tmul.at(bi, bj);
        }

    GaloisModule module(std::move(pres), std::move(action), p, 1);
    mpz_class expected = fox_order(v, p);
    mpz_class got = module.homology().order();
    if (expected != got)
        throw PresentationMismatch("cover presentation order " + got.get_str() +
                                   " disagrees with Fox order " + expected.get_str());
    return module;
}

AbelianGroupInv double_cover_homology(const LinkRecord& rec) {
    if (rec.goeritz) return smith(*rec.goeritz);
    if (rec.seifert && rec.is_knot()) {
        SeifertMatrix v(*rec.seifert);
        return smith(v.matrix() + v.matrix().transpose());
    }
    throw MissingData(rec.name + ": no presentation for the double branched cover");
}

namespace {

int plog_exact(const mpz_class& order, int p) {
    mpz_class rest = order;
    int k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        throw std::logic_error("cohomology order " + order.get_str() + " is not a power of " +
                               std::to_string(p));
    return k;
}

int p_valuation(const mpz_class& n, int p) {
    mpz_class rest = n;
    int k = 0;
    while (rest != 0 && rest % p == 0) {
        rest /= p;
        ++k;
    }
    return k;
}

mpz_class finite_order(const IntMat& presentation) {
    AbelianGroupInv inv = smith(presentation);
    if (!inv.is_finite()) throw InfiniteModule("quotient is infinite");
    return inv.order();
}

}  // namespace

CpCohomology cp_cohomology_dims(const GaloisModule& w) {
    if (!w.homology().is_finite())
        throw InfiniteModule("cp_cohomology_dims needs a finite module (b_1 = " +
                             std::to_string(w.homology().free_rank) + ")");
    int dim = w.presentation().rows();
    CpCohomology out;
    if (dim == 0) return out;

    const IntMat& m = w.presentation();
    IntMat one_minus_z = IntMat::identity(dim) - w.action();
    IntMat norm = w.norm();

    // h0: p-part of the fixed submodule; |ker(1-z)| = |coker(1-z)| on a
    // finite module, and the latter is coker([1-z | m]) over the ambient.
    out.h0 = p_valuation(finite_order(one_minus_z.hcat(m)), w.p());

    // H^1 = {y : norm y in L} / ((1-z) Z^dim + L), L the relation lattice.
    {
        IntMat k = preimage_lattice(norm, m);
        IntMat rels = in_basis(k, one_minus_z.hcat(m));
        out.h1 = plog_exact(finite_order(rels), w.p());
    }
    // H^2 = {y : (1-z) y in L} / (norm Z^dim + L).
    {
        IntMat k = preimage_lattice(one_minus_z, m);
        IntMat rels = in_basis(k, norm.hcat(m));
        out.h2 = plog_exact(finite_order(rels), w.p());
    }
    return out;
}

StructureReport structure_check(const LinkRecord& rec, int p) {
    StructureReport rep;
    rep.name = rec.name;
    rep.p = p;
    rep.kappa = rec.kappa;

    std::optional<GaloisModule> module;
    if (rec.is_knot() && rec.seifert) {
        module.emplace(cyclic_cover_homology(SeifertMatrix(*rec.seifert), p));
    } else if (p == 2 && rec.goeritz) {
        int dim = rec.goeritz->rows();
        IntMat minus = IntMat(dim, dim) - IntMat::identity(dim);
        module.emplace(*rec.goeritz, minus, 2, rec.kappa);
    } else {
        rep.applicable = false;
        rep.pass = true;
        rep.detail = "no presentation for this p";
        return rep;
    }

    rep.applicable = true;
    rep.homology = module->homology();
    rep.norm_zero = columns_in_lattice(module->presentation(), module->norm());

    std::ostringstream detail;
    bool ok = rep.norm_zero;
    if (!rep.norm_zero) detail << "norm does not annihilate H_1; ";

    if (rep.homology.is_finite()) {
        CpCohomology dims = cp_cohomology_dims(*module);
        rep.dims = dims;
        if (dims.h1 != dims.h2) {
            ok = false;
            detail << "h1 != h2; ";
        }
        int expected = module->kappa() - 1;
        if (dims.h1 != expected) {
            ok = false;
            detail << "h1 = " << dims.h1 << ", expected kappa-1 = " << expected << "; ";
        }
    } else {
        detail << "b_1 = " << rep.homology.free_rank << ", dims skipped; ";
    }

    if (rec.is_knot()) {
        if (!rep.homology.primary_part(p).empty()) {
            ok = false;
            detail << "p-torsion present in a knot cover; ";
        }
        if (p == 2 && rep.homology.is_finite() && rep.homology.order() % 2 == 0) {
            ok = false;
            detail << "|H_1(Sigma_2)| even for a knot; ";
        }
    }
    rep.pass = ok;
    rep.detail = detail.str();
    return rep;
}

RedeiReport redei_check(const LinkRecord& rec) {
    if (rec.components != 2)
        throw WrongComponentCount(rec.name + ": parity dichotomy needs exactly 2 components");
    RedeiReport rep;
    rep.name = rec.name;
    long lk = rec.linking[0][1];
    rep.linking_parity = static_cast<int>(((lk % 2) + 2) % 2);
    rep.homology = double_cover_homology(rec);

    std::vector<mpz_class> two_part = rep.homology.primary_part(2);
    std::ostringstream detail;
    if (rep.linking_parity == 1) {
        if (rep.homology.is_finite() && two_part.size() == 1 && two_part[0] == 2) {
            rep.verdict = RedeiVerdict::ConsistentA;
            detail << "odd linking, b_1 = 0, 2-part Z/2";
        } else {
            rep.verdict = RedeiVerdict::Violation;
            detail << "odd linking but H_1 = " << rep.homology.str();
        }
    } else {
        if (!rep.homology.is_finite()) {
            rep.verdict = RedeiVerdict::ConsistentB;
            detail << "even linking, b_1 = " << rep.homology.free_rank << " > 0";
        } else if (two_part.size() == 1 && two_part[0] >= 4) {
            rep.verdict = RedeiVerdict::ConsistentB;
            detail << "even linking, 2-part Z/" << two_part[0].get_str() << " with l >= 2";
        } else {
            rep.verdict = RedeiVerdict::Violation;
            detail << "even linking but H_1 = " << rep.homology.str();
        }
    }
    rep.detail = detail.str();
    return rep;
}

const char* to_string(RedeiVerdict v) {
    switch (v) {
        case RedeiVerdict::ConsistentA: return "ConsistentA";
        case RedeiVerdict::ConsistentB: return "ConsistentB";
        default: return "VIOLATION";
    }
}

}  // namespace hakenlab
