#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singulant/groebner.hpp"
#include "singulant/polynomial.hpp"

namespace singulant {

enum class Tristate { False, True, Unknown };

std::string to_string(Tristate t);

/// R = k[x_1..x_n] / (f_1..f_c), read as local at m = (x_1..x_n).
///
/// A cheap shared handle: copies share the variable names, the defining
/// generators and the lazily computed Groebner basis of the defining ideal.
class RingPresentation {
public:
    RingPresentation() = default;
    /// Throws StructuralError on duplicate names or zero / foreign
    /// defining generators.
    RingPresentation(Field field, std::vector<std::string> names, std::vector<Polynomial> defining,
                     MonomialOrder order = MonomialOrder::grevlex());
    /// Same ring with the defining polynomials given as text in `names`.
    static RingPresentation from_text(Field field, std::vector<std::string> names,
                                      const std::vector<std::string>& defining);

    const RingPtr& ring() const { return state_->ring; }
    const Field& field() const { return state_->ring->field(); }
    std::size_t nvars() const { return state_->names.size(); }
    const std::vector<std::string>& names() const { return state_->names; }
    const std::vector<Polynomial>& defining() const { return state_->defining; }
    bool is_polynomial_ring() const { return state_->defining.empty(); }
    /// True when every defining generator is homogeneous.
    bool graded() const { return state_->graded; }

    /// Groebner basis of the defining ideal in P, computed once.
    const GroebnerBasis& defining_gb() const;

    Polynomial parse(std::string_view text) const;
    Polynomial variable(std::size_t i) const { return Polynomial::variable(ring(), i); }
    Polynomial one() const { return Polynomial::constant(ring(), Scalar(1)); }
    Polynomial zero() const { return Polynomial(ring()); }
    /// Normal form modulo the defining ideal.
    Polynomial reduce(const Polynomial& f) const;
    std::string str(const Polynomial& f) const { return f.to_string(names()); }

    /// "ring Q[x,y] / (x^2, x*y)".
    std::string to_string() const;

private:
    struct State {
        RingPtr ring;
        std::vector<std::string> names;
        std::vector<Polynomial> defining;
        bool graded = true;
        std::once_flag gb_once;
        GroebnerBasis gb;
    };
    std::shared_ptr<State> state_;
};

/// Ideal of R given by lifts of its generators to P. The Groebner basis of
/// (lifts + defining ideal) in P is computed once and shared by copies.
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPresentation ring, std::vector<Polynomial> gens);
    static IdealHandle from_text(const RingPresentation& ring, std::string_view list);
    static IdealHandle maximal(const RingPresentation& ring);
    static IdealHandle unit(const RingPresentation& ring);

    const RingPresentation& ring() const { return state_->ring; }
    const std::vector<Polynomial>& generators() const { return state_->gens; }
    /// Generators reduced modulo the defining ideal, zeros dropped.
    std::vector<Polynomial> reduced_generators() const;
    /// Groebner basis of lifts + defining ideal in P.
    const GroebnerBasis& gb() const;
    bool is_unit() const { return gb().is_unit_ideal(); }
    /// Zero as an ideal of R.
    bool is_zero() const { return reduced_generators().empty(); }

    /// "(g1, g2)" with generators reduced modulo the defining ideal.
    std::string to_string() const;

private:
    struct State {
        RingPresentation ring;
        std::vector<Polynomial> gens;
        std::once_flag gb_once;
        GroebnerBasis gb;
    };
    std::shared_ptr<State> state_;
};

/// Canonical generators for display: the reduced Groebner basis of
/// lifts + defining ideal, minus its members of the defining ideal.
std::vector<Polynomial> normalized_generators(const IdealHandle& I);
std::vector<std::string> normalized_strings(const IdealHandle& I);

bool membership(const Polynomial& f, const IdealHandle& I);
/// f in sqrt(I), decided by 1 in I*P[t] + (1 - t f).
bool radical_membership(const Polynomial& f, const IdealHandle& I);
bool radical_equal(const IdealHandle& I, const IdealHandle& J);
/// Ideal equality in R (mutual membership of generators).
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);
/// I contained in J.
bool ideal_contained(const IdealHandle& I, const IdealHandle& J);

IdealHandle intersection(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_quotient(const IdealHandle& I, const IdealHandle& J);

/// dim R/I, read off the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const IdealHandle& I);
/// n - dim R/I; PreconditionError for the unit ideal.
int height(const IdealHandle& I);

/// Minimal primes of lifts + defining ideal, each generated by variables.
/// Throws UnsupportedInput unless that ideal is monomial.
std::vector<IdealHandle> minimal_primes_monomial(const IdealHandle& I);
/// Variable-index sets of the minimal primes (same contract as above).
std::vector<std::vector<std::size_t>> minimal_prime_supports(const IdealHandle& I);

Tristate is_equidimensional(const RingPresentation& R);

/// Every variable lies in sqrt(I + defining ideal).
bool is_m_primary(const IdealHandle& I);

/// ann_R(m) = (defining : m) as an ideal of R.
IdealHandle socle(const RingPresentation& R);

/// Least n with m^n inside I + defining ideal; PreconditionError when I is
/// not m-primary.
int loewy_length(const IdealHandle& I);

/// dim_k I / mI.
int minimal_generators(const IdealHandle& I);

/// Rank over k of the coefficient vectors of the given polynomials.
std::size_t linear_rank(std::span<const Polynomial> polys);

}  // namespace singulant
