#include "singulant/ideal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "singulant/error.hpp"
#include "singulant/parse.hpp"

namespace singulant {

std::string to_string(Tristate t)
{
    switch (t) {
    case Tristate::False:
        return "false";
    case Tristate::True:
        return "true";
    case Tristate::Unknown:
        return "unknown";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// RingPresentation

RingPresentation::RingPresentation(Field field, std::vector<std::string> names, std::vector<Polynomial> defining,
                                   MonomialOrder order)
    : state_(std::make_shared<State>())
{
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw StructuralError("duplicate variable name '" + n + "'");
    state_->ring = make_ring(field, names.size(), std::move(order));
    state_->names = std::move(names);
    for (auto& f : defining) {
        if (f.is_zero())
            throw StructuralError("zero defining generator");
        if (!f.ring() || f.ring()->nvars() != state_->names.size() || !(f.field() == field))
            throw StructuralError("defining generator lives in a different ring");
        Polynomial g = f.ring() == state_->ring ? f : Polynomial::from_terms(state_->ring, {f.terms().begin(), f.terms().end()});
        state_->graded = state_->graded && g.is_homogeneous();
        state_->defining.push_back(std::move(g));
    }
}

RingPresentation RingPresentation::from_text(Field field, std::vector<std::string> names,
                                             const std::vector<std::string>& defining)
{
    RingPresentation base(field, names, {});
    std::vector<Polynomial> gens;
    for (const auto& d : defining)
        gens.push_back(base.parse(d));
    return RingPresentation(field, std::move(names), std::move(gens), base.ring()->order());
}

const GroebnerBasis& RingPresentation::defining_gb() const
{
    std::call_once(state_->gb_once, [&] { state_->gb = buchberger(state_->ring, state_->defining); });
    return state_->gb;
}

Polynomial RingPresentation::parse(std::string_view text) const
{
    return parse_polynomial(text, ring(), names());
}

Polynomial RingPresentation::reduce(const Polynomial& f) const
{
    if (is_polynomial_ring())
        return f;
    return defining_gb().reduce(f);
}

std::string RingPresentation::to_string() const
{
    std::string s = "ring " + field().name() + "[";
    for (std::size_t i = 0; i < nvars(); ++i)
        s += (i ? "," : "") + names()[i];
    s += "]";
    if (!is_polynomial_ring()) {
        s += " / (";
        for (std::size_t i = 0; i < defining().size(); ++i)
            s += (i ? ", " : "") + str(defining()[i]);
        s += ")";
    }
    return s;
}

// ---------------------------------------------------------------------------
// IdealHandle

IdealHandle::IdealHandle(RingPresentation ring, std::vector<Polynomial> gens) : state_(std::make_shared<State>())
{
    for (const auto& g : gens)
        if (!g.ring() || !(*g.ring() == *ring.ring()))
            throw StructuralError("ideal generator lives in a different ring");
    state_->ring = std::move(ring);
    state_->gens = std::move(gens);
}

IdealHandle IdealHandle::from_text(const RingPresentation& ring, std::string_view list)
{
    return IdealHandle(ring, parse_polynomial_list(list, ring.ring(), ring.names()));
}

IdealHandle IdealHandle::maximal(const RingPresentation& ring)
{
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        gens.push_back(ring.variable(i));
    return IdealHandle(ring, std::move(gens));
}

IdealHandle IdealHandle::unit(const RingPresentation& ring)
{
    return IdealHandle(ring, {ring.one()});
}

const GroebnerBasis& IdealHandle::gb() const
{
    std::call_once(state_->gb_once, [&] {
        const auto& R = state_->ring;
        state_->gb = buchberger(R.ring(), state_->gens, R.is_polynomial_ring() ? nullptr : &R.defining_gb());
    });
    return state_->gb;
}

std::vector<Polynomial> IdealHandle::reduced_generators() const
{
    std::vector<Polynomial> out;
    for (const auto& g : state_->gens) {
        Polynomial r = ring().reduce(g);
        if (!r.is_zero())
            out.push_back(std::move(r));
    }
    return out;
}

std::string IdealHandle::to_string() const
{
    auto gens = reduced_generators();
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + ring().str(gens[i]);
    return s + ")";
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const IdealHandle& I, const IdealHandle& J)
{
    if (!(*I.ring().ring() == *J.ring().ring()))
        throw StructuralError("ideals live in different rings");
}

std::vector<int> shift_map(std::size_t n, int offset)
{
    std::vector<int> m(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i] = static_cast<int>(i) + offset;
    return m;
}

// All generators of lifts + defining ideal.
std::vector<Polynomial> lifted_generators(const IdealHandle& I)
{
    std::vector<Polynomial> gens = I.generators();
    for (const auto& d : I.ring().defining())
        gens.push_back(d);
    return gens;
}

// Intersection of ideals of P given by generators, via t*I + (1-t)*J with t
// eliminated.
std::vector<Polynomial> intersect_in_P(const RingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J)
{
    std::size_t n = ring->nvars();
    auto ext = make_ring(ring->field(), n + 1, MonomialOrder::block({1, n}));
    auto into = shift_map(n, 1);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, Scalar(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I)
        if (!f.is_zero())
            gens.push_back(t * f.remap(ext, into));
    for (const auto& g : J)
        if (!g.is_zero())
            gens.push_back(one_minus_t * g.remap(ext, into));
    auto gb = buchberger(ext, std::move(gens));
    std::vector<int> back(n + 1, -1);
    for (std::size_t i = 0; i < n; ++i)
        back[i + 1] = static_cast<int>(i);
    std::vector<Polynomial> out;
    for (const auto& g : gb.elements())
        if (g.leading_monomial()[0] == 0)
            out.push_back(g.remap(ring, back));
    return out;
}

std::vector<Polynomial> reduce_all(const RingPresentation& R, const std::vector<Polynomial>& gens)
{
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        auto r = R.reduce(g);
        if (!r.is_zero())
            out.push_back(std::move(r));
    }
    return out;
}

// Size of the largest variable set containing no leading-monomial support.
int max_independent_set(std::size_t n, const std::vector<std::uint64_t>& supports)
{
    int best = -1;
    std::uint64_t chosen = 0;
    auto covers = [&](std::uint64_t set) {
        for (auto s : supports)
            if ((s & ~set) == 0)
                return true;
        return false;
    };
    auto rec = [&](auto&& self, std::size_t i, int size) -> void {
        if (size + static_cast<int>(n - i) <= best)
            return;
        if (i == n) {
            best = std::max(best, size);
            return;
        }
        std::uint64_t with = chosen | (std::uint64_t{1} << i);
        if (!covers(with)) {
            chosen = with;
            self(self, i + 1, size + 1);
            chosen &= ~(std::uint64_t{1} << i);
        }
        self(self, i + 1, size);
    };
    if (covers(0))
        return -1;
    rec(rec, 0, 0);
    return best;
}

std::vector<std::uint64_t> monomial_prime_masks(const IdealHandle& I)
{
    const auto& gb = I.gb();
    if (gb.is_unit_ideal())
        return {};
    std::vector<std::uint64_t> supports;
    for (const auto& g : gb.elements()) {
        if (!g.is_monomial())
            throw UnsupportedInput("minimal primes are only computed for monomial ideals");
        supports.push_back(g.leading_monomial().support());
    }
    std::set<std::uint64_t> found;
    auto rec = [&](auto&& self, std::uint64_t S) -> void {
        for (auto s : supports)
            if ((s & S) == 0) {
                for (std::size_t v = 0; v < 64; ++v)
                    if (s & (std::uint64_t{1} << v))
                        self(self, S | (std::uint64_t{1} << v));
                return;
            }
        found.insert(S);
    };
    rec(rec, 0);
    std::vector<std::uint64_t> minimal;
    for (auto S : found) {
        bool is_min = true;
        for (auto T : found)
            if (T != S && (T & ~S) == 0) {
                is_min = false;
                break;
            }
        if (is_min)
            minimal.push_back(S);
    }
    std::sort(minimal.begin(), minimal.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        if (pa != pb)
            return pa < pb;
        // Lexicographic on the sorted variable list.
        for (std::size_t v = 0; v < 64; ++v) {
            bool ia = a & (std::uint64_t{1} << v), ib = b & (std::uint64_t{1} << v);
            if (ia != ib)
                return ia;
        }
        return false;
    });
    return minimal;
}

}  // namespace

std::vector<Polynomial> normalized_generators(const IdealHandle& I)
{
    std::vector<Polynomial> out;
    for (const auto& g : I.gb().elements()) {
        auto r = I.ring().reduce(g);
        if (!r.is_zero())
            out.push_back(r.monic());
    }
    return out;
}

std::vector<std::string> normalized_strings(const IdealHandle& I)
{
    std::vector<std::string> out;
    for (const auto& g : normalized_generators(I))
        out.push_back(I.ring().str(g));
    return out;
}

bool membership(const Polynomial& f, const IdealHandle& I)
{
    return I.gb().contains(f);
}

bool radical_membership(const Polynomial& f, const IdealHandle& I)
{
    if (f.is_zero() || membership(f, I))
        return true;
    const auto& R = I.ring();
    std::size_t n = R.nvars();
    auto ext = make_ring(R.field(), n + 1, MonomialOrder::block({n, 1}));
    auto into = shift_map(n, 0);
    std::vector<Polynomial> gens;
    for (const auto& g : lifted_generators(I))
        gens.push_back(g.remap(ext, into));
    Polynomial t = Polynomial::variable(ext, n);
    gens.push_back(Polynomial::constant(ext, Scalar(1)) - t * f.remap(ext, into));
    return buchberger(ext, std::move(gens)).is_unit_ideal();
}

bool radical_equal(const IdealHandle& I, const IdealHandle& J)
{
    require_same(I, J);
    for (const auto& g : I.generators())
        if (!radical_membership(g, J))
            return false;
    for (const auto& g : J.generators())
        if (!radical_membership(g, I))
            return false;
    return true;
}

bool ideal_contained(const IdealHandle& I, const IdealHandle& J)
{
    require_same(I, J);
    for (const auto& g : I.generators())
        if (!membership(g, J))
            return false;
    return true;
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J)
{
    return ideal_contained(I, J) && ideal_contained(J, I);
}

IdealHandle intersection(const IdealHandle& I, const IdealHandle& J)
{
    require_same(I, J);
    const auto& R = I.ring();
    auto gens = intersect_in_P(R.ring(), lifted_generators(I), lifted_generators(J));
    return IdealHandle(R, reduce_all(R, gens));
}

IdealHandle ideal_quotient(const IdealHandle& I, const IdealHandle& J)
{
    require_same(I, J);
    const auto& R = I.ring();
    auto base = lifted_generators(I);
    std::optional<std::vector<Polynomial>> acc;
    for (const auto& g : J.generators()) {
        if (membership(g, I))
            continue;  // (I : g) is the unit ideal
        // (I : g) = (I ∩ (g)) / g.
        std::vector<Polynomial> part;
        for (const auto& h : intersect_in_P(R.ring(), base, {g}))
            part.push_back(divide_exact(h, g));
        acc = acc ? intersect_in_P(R.ring(), *acc, part) : part;
    }
    if (!acc)
        return IdealHandle::unit(R);
    auto gb = buchberger(R.ring(), *acc, R.is_polynomial_ring() ? nullptr : &R.defining_gb());
    return IdealHandle(R, reduce_all(R, std::vector<Polynomial>(gb.elements().begin(), gb.elements().end())));
}

int krull_dimension(const IdealHandle& I)
{
    const auto& gb = I.gb();
    std::size_t n = I.ring().nvars();
    if (gb.is_unit_ideal())
        return -1;
    if (n > 64)
        throw UnsupportedInput("dimension computation supports at most 64 variables");
    std::vector<std::uint64_t> supports;
    for (const auto& m : gb.leading_monomials())
        supports.push_back(m.support());
    return max_independent_set(n, supports);
}

int height(const IdealHandle& I)
{
    int d = krull_dimension(I);
    if (d < 0)
        throw PreconditionError("height of the unit ideal is undefined");
    return static_cast<int>(I.ring().nvars()) - d;
}

std::vector<std::vector<std::size_t>> minimal_prime_supports(const IdealHandle& I)
{
    std::vector<std::vector<std::size_t>> out;
    for (auto mask : monomial_prime_masks(I)) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < 64; ++v)
            if (mask & (std::uint64_t{1} << v))
                vars.push_back(v);
        out.push_back(std::move(vars));
    }
    return out;
}

std::vector<IdealHandle> minimal_primes_monomial(const IdealHandle& I)
{
    std::vector<IdealHandle> out;
    for (const auto& vars : minimal_prime_supports(I)) {
        std::vector<Polynomial> gens;
        for (auto v : vars)
            gens.push_back(I.ring().variable(v));
        out.emplace_back(I.ring(), std::move(gens));
    }
    return out;
}

Tristate is_equidimensional(const RingPresentation& R)
{
    IdealHandle zero(R, {});
    const auto& gb = zero.gb();
    if (gb.is_zero_ideal())
        return Tristate::True;
    if (gb.is_unit_ideal())
        return Tristate::Unknown;
    for (const auto& g : gb.elements())
        if (!g.is_monomial())
            return Tristate::Unknown;
    auto primes = minimal_prime_supports(zero);
    for (const auto& p : primes)
        if (p.size() != primes.front().size())
            return Tristate::False;
    return Tristate::True;
}

bool is_m_primary(const IdealHandle& I)
{
    for (std::size_t i = 0; i < I.ring().nvars(); ++i)
        if (!radical_membership(I.ring().variable(i), I))
            return false;
    return true;
}

IdealHandle socle(const RingPresentation& R)
{
    return ideal_quotient(IdealHandle(R, {}), IdealHandle::maximal(R));
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t n, int d)
{
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 >= n) {
            if (n > 0)
                e[n - 1] = left;
            if (n > 0 || left == 0)
                out.emplace_back(e);
            if (n > 0)
                e[n - 1] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace

int loewy_length(const IdealHandle& I)
{
    if (!is_m_primary(I))
        throw PreconditionError("loewy_length requires an m-primary ideal");
    const auto& R = I.ring();
    int limit = Budget::current().max_degree;
    for (int n = 0; n <= limit; ++n) {
        bool inside = true;
        for (const auto& m : monomials_of_degree(R.nvars(), n))
            if (!membership(Polynomial::term(R.ring(), m, Scalar(1)), I)) {
                inside = false;
                break;
            }
        if (inside)
            return n;
    }
    throw ResourceError("Loewy length exceeds the degree budget");
}

std::size_t linear_rank(std::span<const Polynomial> polys)
{
    if (polys.empty())
        return 0;
    const Field& F = polys.front().field();
    const auto& ord = polys.front().ring()->order();
    // Echelon form keyed by leading monomial.
    std::vector<Polynomial> echelon;
    for (auto p : polys) {
        bool changed = true;
        while (!p.is_zero() && changed) {
            changed = false;
            for (const auto& e : echelon)
                for (const auto& t : p.terms())
                    if (t.mono == e.leading_monomial()) {
                        p -= e.scaled(F.div(t.coeff, e.leading_coeff()));
                        changed = true;
                        break;
                    }
        }
        if (!p.is_zero())
            echelon.push_back(p.monic());
    }
    (void)ord;
    return echelon.size();
}

int minimal_generators(const IdealHandle& I)
{
    const auto& R = I.ring();
    auto gens = I.reduced_generators();
    if (gens.empty())
        return 0;
    std::vector<Polynomial> mI;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < R.nvars(); ++i)
            mI.push_back(g * R.variable(i));
    auto gb = buchberger(R.ring(), mI, R.is_polynomial_ring() ? nullptr : &R.defining_gb());
    std::vector<Polynomial> residues;
    for (const auto& g : gens)
        residues.push_back(gb.reduce(g));
    return static_cast<int>(linear_rank(residues));
}

}  // namespace singulant
