#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singulant/resolve.hpp"

namespace singulant {

/// Z / B inside R^rank: Z = generators of a cycle module, B = generators of
/// the boundaries together with the relations of the ambient module.
struct Subquotient {
    RingPresentation ring;
    std::size_t rank = 0;
    std::vector<ModuleElement> cycles;
    std::vector<ModuleElement> boundaries;

    /// Every cycle lies in the span of the boundaries.
    bool is_zero() const;
    /// Boundaries are contained in cycles + relations (sanity invariant).
    bool boundaries_in_cycles(const std::vector<ModuleElement>& relations) const;
    /// The same module as a cokernel on the cycle generators.
    FinitelyPresentedModule present() const;
};

/// r * z lies in the boundary span for every cycle generator z.
bool annihilates(const Polynomial& r, const Subquotient& H);

/// Cohomology at the middle of  A -in-> B -out-> C, where B and C carry the
/// relation modules rel_here and rel_next. Null `in` / `out` mean zero maps.
Subquotient cohomology_at(const RingPresentation& R, std::size_t rank, const PolyMatrix* in, const PolyMatrix* out,
                          const std::vector<ModuleElement>& rel_here, const std::vector<ModuleElement>& rel_next);

/// k-dimension of a module of finite length; nullopt when the length is
/// infinite.
std::optional<std::size_t> k_dimension(const FinitelyPresentedModule& M);

/// ann_R(M) as an ideal of R.
IdealHandle annihilator(const FinitelyPresentedModule& M);

// ---------------------------------------------------------------------------
// Koszul complexes, cohomological degrees 0..l: K^i = (M)^{C(l,i)} on the
// i-subsets of the sequence, with K(r;M) = (M -r-> M).

/// Matrix of d^i : K^i -> K^{i+1} on free modules of rank C(l,i)*s.
PolyMatrix koszul_differential(const std::vector<Polynomial>& f, std::size_t i, std::size_t s);
Subquotient koszul_subquotient(const std::vector<Polynomial>& f, const FinitelyPresentedModule& M, std::size_t i);
FinitelyPresentedModule koszul_cohomology(const std::vector<Polynomial>& f, const FinitelyPresentedModule& M,
                                          std::size_t i);
/// ann(M) + (f) is inside sqrt(ann H^i(K(f;M))) for every i.
bool koszul_support_check(const std::vector<Polynomial>& f, const FinitelyPresentedModule& M);
/// Least i with H^i(K(x_1..x_n; M)) != 0; PreconditionError for M = 0.
int koszul_depth(const FinitelyPresentedModule& M);

// ---------------------------------------------------------------------------

struct ExtModule {
    std::size_t degree = 0;
    Subquotient module;
};

/// k-dimension of Ext when it has finite length.
std::optional<std::size_t> ext_k_dimension(const ExtModule& E);

/// Ext^i_R(M, N) from the minimal resolution of M.
ExtModule ext_module(const FinitelyPresentedModule& M, const FinitelyPresentedModule& N, std::size_t i);
/// Same, reusing a resolution of M of length >= i + 1 (or a complete one).
ExtModule ext_module(const FreeResolution& F, const FinitelyPresentedModule& N, std::size_t i);
bool annihilates_ext(const Polynomial& r, const FinitelyPresentedModule& M, const FinitelyPresentedModule& N,
                     std::size_t i);

/// annihilates_ext(r, M, Omega^1 M, 1). True certifies that r * id_M
/// factors through a projective. False is not a proof that r misses
/// ann_R(M) in the singularity category; it proves r is not in ca^1(R).
bool stable_annihilation_test(const Polynomial& r, const FinitelyPresentedModule& M);

/// Stable annihilation on Omega^shift(M). Since M = Sigma^shift
/// Omega^shift(M) in D_sg(R), true certifies that r kills M there; a zero
/// syzygy (M perfect) passes trivially. False proves r is not in
/// ca^{shift+1}(R).
bool shifted_stable_annihilation_test(const Polynomial& r, const FinitelyPresentedModule& M, std::size_t shift);

struct CorpusModule {
    std::string name;
    FinitelyPresentedModule module;
};

/// k, R, R/(x_i), R/m^2, Omega^1 k and the cokernel of a random sparse 2x3
/// matrix of linear forms drawn from `seed`.
std::vector<CorpusModule> default_corpus(const RingPresentation& R, std::uint64_t seed);

enum class WitnessOutcome { Pass, Fail, Budget, Error };
std::string to_string(WitnessOutcome o);

struct WitnessReport {
    std::size_t degree = 0;
    /// outcomes[a][b] for the pair (corpus[a], corpus[b]).
    std::vector<std::vector<WitnessOutcome>> outcomes;
    std::vector<std::vector<std::string>> messages;
    /// Some pair failed: r is not in ca^n(R).
    bool excluded() const;
    /// Every pair passed: evidence (not proof) for r in ca^n(R).
    bool all_pass() const;
};

WitnessReport ca_witness(const Polynomial& r, std::size_t n, const std::vector<CorpusModule>& corpus);
WitnessReport ca_witness_serial(const Polynomial& r, std::size_t n, const std::vector<CorpusModule>& corpus);

}  // namespace singulant
