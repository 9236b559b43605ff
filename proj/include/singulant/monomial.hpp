#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace singulant {

/// Exponent vector over a fixed number of ambient variables, with its total
/// degree cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t size() const { return exps_.size(); }
    int degree() const { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    std::span<const int> exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    /// Bitmask of the variables with a positive exponent (first 64 only).
    std::uint64_t support() const;

    bool divides(const Monomial& other) const;
    /// Precondition: divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    /// Monomial with exponent i decreased by one; precondition exps[i] > 0.
    Monomial lowered(std::size_t i) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Monomial order: grevlex, lex, or a block order whose blocks are each
/// compared by grevlex, earlier blocks dominating.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    /// Block sizes must sum to the number of variables of the ring using it.
    static MonomialOrder block(std::vector<std::size_t> sizes) { return MonomialOrder(Kind::Block, std::move(sizes)); }

    Kind kind() const { return kind_; }
    std::span<const std::size_t> blocks() const { return blocks_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind k, std::vector<std::size_t> b) : kind_(k), blocks_(std::move(b)) {}

    Kind kind_;
    std::vector<std::size_t> blocks_;
};

}  // namespace singulant
