#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "singulant/error.hpp"
#include "singulant/groebner.hpp"
#include "singulant/ideal.hpp"
#include "singulant/matrix.hpp"

namespace singulant {

/// Basis of the defining ideal to pass as `quotient`, or nullptr for P.
const GroebnerBasis* quotient_basis(const RingPresentation& R);

/// Cokernel of an r0 x r1 presentation matrix over R.
class FinitelyPresentedModule {
public:
    FinitelyPresentedModule() = default;
    /// Entries are reduced modulo the defining ideal; zero columns dropped.
    FinitelyPresentedModule(RingPresentation ring, PolyMatrix presentation, std::vector<int> shifts = {});
    static FinitelyPresentedModule free(const RingPresentation& ring, std::size_t rank);
    /// R / I.
    static FinitelyPresentedModule cyclic(const IdealHandle& I);
    /// R / (gens) from a generator list such as "(x, y^2)".
    static FinitelyPresentedModule cyclic(const RingPresentation& ring, std::string_view gens);

    const RingPresentation& ring() const { return state_->ring; }
    const PolyMatrix& presentation() const { return state_->matrix; }
    std::size_t generator_count() const { return state_->matrix.rows(); }
    std::size_t relation_count() const { return state_->matrix.cols(); }
    const std::vector<int>& shifts() const { return state_->shifts; }
    /// Groebner basis of the relation submodule in R^r0, computed once.
    const ModuleBasis& relation_basis() const;
    bool is_zero() const;
    /// True when R is graded and every relation column is homogeneous.
    bool graded() const;
    std::string to_string() const;

private:
    struct State {
        RingPresentation ring;
        PolyMatrix matrix;
        std::vector<int> shifts;
        std::once_flag once;
        ModuleBasis basis;
    };
    std::shared_ptr<State> state_;
};

/// F_L -> ... -> F_1 -> F_0 with d_i : F_i -> F_{i-1} stored as a
/// rank(F_{i-1}) x rank(F_i) matrix in differentials[i-1].
struct FreeResolution {
    RingPresentation ring;
    std::vector<std::size_t> ranks;
    std::vector<PolyMatrix> differentials;
    bool minimal = false;
    /// The next syzygy module is zero: the resolution is finite.
    bool complete = false;

    std::size_t length() const { return differentials.size(); }
    const PolyMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
};

/// Budget exhaustion during a resolution; `partial` holds the steps done.
class ResolutionBudgetError : public ResourceError {
public:
    ResolutionBudgetError(const std::string& what, std::shared_ptr<const FreeResolution> partial)
        : ResourceError(what), partial_(std::move(partial))
    {
    }
    const FreeResolution& partial() const { return *partial_; }

private:
    std::shared_ptr<const FreeResolution> partial_;
};

/// Minimal (after minimalize) resolution up to homological degree L.
FreeResolution free_resolution(const FinitelyPresentedModule& M, std::size_t L);
/// Resolution by iterated syzygies with redundant generators pruned but no
/// unit elimination.
FreeResolution raw_resolution(const FinitelyPresentedModule& M, std::size_t L);
/// Cancels nonzero constant entries by row and column operations.
FreeResolution minimalize(FreeResolution res);

/// Every entry of every differential has zero constant term.
bool entries_in_maximal_ideal(const FreeResolution& res);
/// d_i * d_{i+1} == 0 modulo the defining ideal for all i.
bool composes_to_zero(const FreeResolution& res);
/// ker d_i is contained in im d_{i+1} for 1 <= i < length.
bool exactness_certified(const FreeResolution& res);

/// Omega^n(M) = coker(d_{n+1}) on F_n of the minimal resolution.
FinitelyPresentedModule syzygy_module(const FinitelyPresentedModule& M, std::size_t n);

/// M restricted to P, presented by the relations of M and I * e_k.
FinitelyPresentedModule restrict_to_ambient(const FinitelyPresentedModule& M);
/// pd of M over P; PreconditionError for the zero module.
int projective_dimension_over_P(const FinitelyPresentedModule& M);
/// n - pd_P(M).
int depth(const FinitelyPresentedModule& M);

}  // namespace singulant
