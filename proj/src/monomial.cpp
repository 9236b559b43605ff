#include "singulant/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace singulant {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps))
{
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power)
{
    Monomial m(nvars);
    m.exps_[i] = power;
    m.degree_ = power;
    return m;
}

std::uint64_t Monomial::support() const
{
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
        if (exps_[i] > 0)
            mask |= std::uint64_t{1} << i;
    return mask;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] -= divisor.exps_[i];
    r.degree_ -= divisor.degree_;
    return r;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r(*this);
    r.degree_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] = std::max(exps_[i], other.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0)
            return false;
    return true;
}

Monomial Monomial::lowered(std::size_t i) const
{
    Monomial r(*this);
    --r.exps_[i];
    --r.degree_;
    return r;
}

namespace {

// Degree first, then the monomial with the smaller exponent in the last
// differing variable is larger.
std::strong_ordering grevlex_range(std::span<const int> a, std::span<const int> b)
{
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da <=> db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind_) {
    case Kind::Grevlex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return b[i] <=> a[i];
        return std::strong_ordering::equal;
    case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] <=> b[i];
        return std::strong_ordering::equal;
    case Kind::Block: {
        auto ea = a.exponents();
        auto eb = b.exponents();
        std::size_t start = 0;
        for (std::size_t len : blocks_) {
            auto c = grevlex_range(ea.subspan(start, len), eb.subspan(start, len));
            if (c != 0)
                return c;
            start += len;
        }
        return std::strong_ordering::equal;
    }
    }
    return std::strong_ordering::equal;
}

}  // namespace singulant
