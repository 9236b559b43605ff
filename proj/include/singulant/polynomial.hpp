#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "singulant/field.hpp"
#include "singulant/monomial.hpp"

namespace singulant {

/// Ambient polynomial ring k[x_0..x_{n-1}] with a fixed monomial order.
/// Variables are identified by index; names live in the presentation.
class PolyRing {
public:
    PolyRing(Field field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex());

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }

    friend bool operator==(const PolyRing&, const PolyRing&) = default;

private:
    Field field_;
    std::size_t nvars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex());

struct Term {
    Monomial mono;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact coefficients. Terms are stored in strictly
/// decreasing monomial order with no zero coefficients.
class Polynomial {
public:
    /// Detached zero; combining it with anything throws StructuralError.
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial term(RingPtr ring, Monomial m, const Scalar& c);
    /// Sorts, merges equal monomials and drops zero coefficients.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const Field& field() const { return ring_->field(); }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const;

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Scalar& leading_coeff() const { return terms_.front().coeff; }
    /// Maximal total degree of a term; -1 for zero.
    int total_degree() const;
    Scalar constant_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

    Polynomial scaled(const Scalar& c) const;
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(unsigned k) const;
    Polynomial monic() const;

    /// Formal derivative with respect to variable i.
    Polynomial partial_derivative(std::size_t i) const;

    /// Re-expresses the polynomial in another ring over the same field;
    /// var_map[i] is the target index of variable i, or -1 when variable i
    /// must not occur. Throws StructuralError otherwise.
    Polynomial remap(RingPtr target, std::span<const int> var_map) const;

    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void require_same_ring(const Polynomial& q) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Exact quotient f / g; throws StructuralError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Default names x0, x1, ... for n variables.
std::vector<std::string> default_names(std::size_t n);

}  // namespace singulant
