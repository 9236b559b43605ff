#include "singulant/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "singulant/error.hpp"

namespace singulant {

PolyRing::PolyRing(Field field, std::size_t nvars, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(std::move(order))
{
    if (order_.kind() == MonomialOrder::Kind::Block) {
        auto b = order_.blocks();
        if (std::accumulate(b.begin(), b.end(), std::size_t{0}) != nvars_)
            throw StructuralError("block order sizes do not sum to the variable count");
    }
}

RingPtr make_ring(Field field, std::size_t nvars, MonomialOrder order)
{
    return std::make_shared<const PolyRing>(field, nvars, std::move(order));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c)
{
    return term(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i)
{
    if (i >= ring->nvars())
        throw StructuralError("variable index out of range");
    return term(ring, Monomial::variable(ring->nvars(), i), Scalar(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Scalar& c)
{
    if (m.size() != ring->nvars())
        throw StructuralError("monomial length does not match the ring");
    Polynomial p(std::move(ring));
    Scalar v = p.field().normalize(c);
    if (!Field::is_zero(v))
        p.terms_.push_back({std::move(m), std::move(v)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order();
    const auto& F = p.field();
    for (auto& t : terms) {
        if (t.mono.size() != p.ring_->nvars())
            throw StructuralError("monomial length does not match the ring");
        t.coeff = F.normalize(std::move(t.coeff));
    }
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
        } else {
            if (!p.terms_.empty() && Field::is_zero(p.terms_.back().coeff))
                p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && Field::is_zero(p.terms_.back().coeff))
        p.terms_.pop_back();
    return p;
}

void Polynomial::require_same_ring(const Polynomial& q) const
{
    if (!ring_ || !q.ring_ || (ring_ != q.ring_ && !(*ring_ == *q.ring_)))
        throw StructuralError("polynomials live in different ambient rings");
}

bool Polynomial::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree())
            return false;
    return true;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

Scalar Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coeff;
    return Scalar(0);
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.coeff = field().neg(t.coeff);
    return r;
}

namespace {

// Merge of two sorted term lists; sign selects addition or subtraction.
std::vector<Term> merge_terms(const PolyRing& ring, std::span<const Term> a, std::span<const Term> b, bool subtract)
{
    const auto& ord = ring.order();
    const auto& F = ring.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        std::strong_ordering c = std::strong_ordering::greater;
        if (i == a.size())
            c = std::strong_ordering::less;
        else if (j < b.size())
            c = ord.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Scalar s = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
            if (!Field::is_zero(s))
                out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q)
{
    require_same_ring(q);
    terms_ = merge_terms(*ring_, terms_, q.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q)
{
    require_same_ring(q);
    terms_ = merge_terms(*ring_, terms_, q.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    p.require_same_ring(q);
    if (p.is_zero() || q.is_zero())
        return Polynomial(p.ring_);
    if (q.size() == 1)
        return p.mul_term(q.terms_[0].mono, q.terms_[0].coeff);
    if (p.size() == 1)
        return q.mul_term(p.terms_[0].mono, p.terms_[0].coeff);
    Polynomial acc(p.ring_);
    for (const auto& t : q.terms_)
        acc += p.mul_term(t.mono, t.coeff);
    return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    Scalar v = field().normalize(c);
    if (Field::is_zero(v))
        return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.coeff = field().mul(t.coeff, v);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const
{
    Scalar v = field().normalize(c);
    if (Field::is_zero(v))
        return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono * m, field().mul(t.coeff, v)});
    return r;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result = constant(ring_, Scalar(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero() || Field::is_one(leading_coeff()))
        return *this;
    return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::partial_derivative(std::size_t i) const
{
    if (!ring_ || i >= ring_->nvars())
        throw StructuralError("derivative variable index out of range");
    // Dividing by x_i keeps the surviving terms in decreasing order.
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[i];
        if (e == 0)
            continue;
        Scalar c = field().mul(t.coeff, field().from_int(e));
        if (!Field::is_zero(c))
            r.terms_.push_back({t.mono.lowered(i), std::move(c)});
    }
    return r;
}

Polynomial Polynomial::remap(RingPtr target, std::span<const int> var_map) const
{
    if (!(target->field() == field()))
        throw StructuralError("remap between different coefficient fields");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<int> e(target->nvars(), 0);
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (var_map[i] < 0)
                throw StructuralError("remap drops a variable that occurs");
            e[static_cast<std::size_t>(var_map[i])] += t.mono[i];
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string(std::span<const std::string> names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool negative = sgn(c) < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = (c == 1);
        if (!unit || t.mono.is_one()) {
            os << c.get_str();
            if (!t.mono.is_one())
                os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            int e = t.mono[i];
            if (e == 0)
                continue;
            if (!first_var)
                os << "*";
            first_var = false;
            os << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e > 1)
                os << "^" << e;
        }
    }
    return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_))
        return a.terms_.empty() && b.terms_.empty();
    return a.terms_ == b.terms_;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        throw StructuralError("exact division by zero");
    const auto& F = f.field();
    Polynomial quotient(f.ring());
    Polynomial rest = f;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!g.leading_monomial().divides(lt.mono))
            throw StructuralError("exact division has a nonzero remainder");
        Monomial m = lt.mono / g.leading_monomial();
        Scalar c = F.div(lt.coeff, g.leading_coeff());
        quotient += Polynomial::term(f.ring(), m, c);
        rest -= g.mul_term(m, c);
    }
    return quotient;
}

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace singulant
