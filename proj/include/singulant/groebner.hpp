#pragma once

#include <memory>
#include <span>
#include <vector>

#include "singulant/matrix.hpp"
#include "singulant/polynomial.hpp"

namespace singulant {

/// Resource limits for a single Groebner computation. Exceeding either one
/// throws ResourceError.
struct Budget {
    int max_degree = 24;
    long max_steps = 1'000'000;

    /// Process-wide default, set once at startup by the CLI.
    static const Budget& current();
    static void set_current(const Budget& b);
};

/// Term-over-position order on P^r, optionally with the first
/// `elimination_components` coordinates forming a block that dominates the
/// rest (used to eliminate them when computing syzygies).
struct ModuleOrder {
    std::size_t elimination_components = 0;
};

namespace detail {
struct ModTerm;
struct BasisData;
}  // namespace detail

/// Reduced Groebner basis of a submodule of P^r. Over a quotient
/// R = P/I the basis also contains GB(I) * e_k for every coordinate k, so
/// reduction against it is reduction in R^r.
class ModuleBasis {
public:
    ModuleBasis() = default;

    const RingPtr& ring() const;
    std::size_t rank() const;
    std::size_t size() const;
    std::vector<ModuleElement> elements() const;
    /// Leading (monomial, coordinate) of element i.
    std::pair<Monomial, std::size_t> leading(std::size_t i) const;

    ModuleElement reduce(const ModuleElement& v) const;
    bool contains(const ModuleElement& v) const { return reduce(v).is_zero(); }

    explicit ModuleBasis(std::shared_ptr<const detail::BasisData> data) : data_(std::move(data)) {}
    const detail::BasisData& data() const { return *data_; }

private:
    std::shared_ptr<const detail::BasisData> data_;
};

/// Reduced Groebner basis of an ideal of P: monic, no leading monomial
/// divides another, sorted by decreasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const RingPtr& ring() const { return ring_; }
    std::span<const Polynomial> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool is_zero_ideal() const { return elements_.empty(); }
    bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }
    std::vector<Monomial> leading_monomials() const;

    Polynomial reduce(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

private:
    friend GroebnerBasis buchberger(RingPtr, std::vector<Polynomial>, const GroebnerBasis*, const Budget&);
    RingPtr ring_;
    ModuleBasis basis_;
    std::vector<Polynomial> elements_;
};

/// Reduced Groebner basis of the ideal generated by gens (plus the ideal
/// behind `quotient`, when given) under the ring's monomial order.
GroebnerBasis buchberger(RingPtr ring, std::vector<Polynomial> gens, const GroebnerBasis* quotient = nullptr,
                         const Budget& budget = Budget::current());

/// Reduced Groebner basis of the submodule of P^rank (or R^rank when
/// `quotient` is the basis of the defining ideal) generated by gens.
ModuleBasis module_buchberger(RingPtr ring, std::size_t rank, std::vector<ModuleElement> gens,
                              const GroebnerBasis* quotient = nullptr, ModuleOrder order = {},
                              const Budget& budget = Budget::current());

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.reduce(f); }
inline ModuleElement normal_form(const ModuleElement& v, const ModuleBasis& gb) { return gb.reduce(v); }

/// Generators of {a in R^m : sum a_i g_i = 0}, where R = P or P/I. Over a
/// quotient the coordinates are returned reduced modulo I and zero syzygies
/// (multiples of I) are dropped.
std::vector<ModuleElement> syzygies(RingPtr ring, std::size_t rank, std::span<const ModuleElement> gens,
                                    const GroebnerBasis* quotient = nullptr,
                                    const Budget& budget = Budget::current());

}  // namespace singulant
