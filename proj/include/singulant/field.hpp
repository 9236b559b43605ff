#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace singulant {

using Scalar = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
///
/// Scalars are plain GMP rationals; the field decides how they are
/// normalized. Over Q they are kept in lowest terms with positive
/// denominator, over F_p they are integers in [0, p).
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws StructuralError unless p is prime.
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Scalar from_int(long v) const;
    Scalar normalize(Scalar v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
    static bool is_one(const Scalar& a) { return a == 1; }

    /// "Q" or "F<p>".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    void reduce_mod(mpz_class& z) const;

    std::uint32_t p_;
};

}  // namespace singulant
