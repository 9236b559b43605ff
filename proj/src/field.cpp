#include "singulant/field.hpp"

#include "singulant/error.hpp"

namespace singulant {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw StructuralError("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

void Field::reduce_mod(mpz_class& z) const
{
    mpz_fdiv_r_ui(z.get_mpz_t(), z.get_mpz_t(), p_);
}

Scalar Field::normalize(Scalar v) const
{
    v.canonicalize();
    if (p_ == 0)
        return v;
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    reduce_mod(num);
    reduce_mod(den);
    if (den == 0)
        throw StructuralError("denominator vanishes in F" + std::to_string(p_));
    if (den != 1) {
        mpz_class p(p_);
        mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num *= den;
        reduce_mod(num);
    }
    return Scalar(num);
}

Scalar Field::from_int(long v) const { return normalize(Scalar(v)); }

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= p_)
        s -= p_;
    return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0)
        s += p_;
    return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a * b;
    mpz_class s = a.get_num() * b.get_num();
    reduce_mod(s);
    return Scalar(s);
}

Scalar Field::inv(const Scalar& a) const
{
    if (is_zero(a))
        throw StructuralError("division by zero");
    if (p_ == 0)
        return 1 / a;
    mpz_class r;
    mpz_class p(p_);
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0) {
        if (is_zero(b))
            throw StructuralError("division by zero");
        return a / b;
    }
    return mul(a, inv(b));
}

Scalar Field::neg(const Scalar& a) const
{
    if (p_ == 0 || is_zero(a))
        return -a;
    return Scalar(mpz_class(p_) - a.get_num());
}

std::string Field::name() const
{
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

}  // namespace singulant
