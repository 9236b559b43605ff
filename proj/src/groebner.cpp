#include "singulant/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>

#include "singulant/error.hpp"

namespace singulant {

namespace {
std::mutex budget_mutex;
Budget global_budget;
}  // namespace

const Budget& Budget::current()
{
    std::lock_guard lock(budget_mutex);
    return global_budget;
}

void Budget::set_current(const Budget& b)
{
    if (b.max_degree <= 0 || b.max_steps <= 0)
        throw StructuralError("budgets must be positive");
    std::lock_guard lock(budget_mutex);
    global_budget = b;
}

namespace detail {

struct ModTerm {
    Monomial mono;
    std::uint32_t comp;
    Scalar coeff;
};

using ModVec = std::vector<ModTerm>;

struct TermOrder {
    const MonomialOrder* mono;
    std::size_t elim;

    std::strong_ordering operator()(const Monomial& ma, std::uint32_t ca, const Monomial& mb, std::uint32_t cb) const
    {
        bool ba = ca < elim, bb = cb < elim;
        if (ba != bb)
            return ba ? std::strong_ordering::greater : std::strong_ordering::less;
        auto c = mono->compare(ma, mb);
        if (c != 0)
            return c;
        return cb <=> ca;
    }
    std::strong_ordering operator()(const ModTerm& a, const ModTerm& b) const
    {
        return (*this)(a.mono, a.comp, b.mono, b.comp);
    }
};

struct BasisData {
    RingPtr ring;
    std::size_t rank = 0;
    std::size_t elim = 0;
    std::vector<ModVec> elems;

    TermOrder order() const { return TermOrder{&ring->order(), elim}; }
};

}  // namespace detail

using detail::BasisData;
using detail::ModTerm;
using detail::ModVec;
using detail::TermOrder;

namespace {

ModVec to_modvec(const ModuleElement& v, const TermOrder& ord)
{
    ModVec out;
    for (std::size_t k = 0; k < v.rank(); ++k)
        for (const auto& t : v[k].terms())
            out.push_back({t.mono, static_cast<std::uint32_t>(k), t.coeff});
    std::sort(out.begin(), out.end(), [&](const ModTerm& a, const ModTerm& b) { return ord(a, b) > 0; });
    return out;
}

ModuleElement from_modvec(const ModVec& v, const RingPtr& ring, std::size_t rank, std::size_t shift = 0)
{
    std::vector<std::vector<Term>> coords(rank);
    for (const auto& t : v)
        coords.at(t.comp - shift).push_back({t.mono, t.coeff});
    std::vector<Polynomial> polys;
    polys.reserve(rank);
    for (auto& c : coords)
        polys.push_back(Polynomial::from_terms(ring, std::move(c)));
    return ModuleElement(ring, std::move(polys));
}

// a - c * m * g, with a and g sorted decreasingly.
ModVec sub_mul(std::span<const ModTerm> a, const Scalar& c, const Monomial& m, const ModVec& g, const TermOrder& ord,
               const Field& F)
{
    ModVec out;
    out.reserve(a.size() + g.size());
    std::size_t i = 0, j = 0;
    std::optional<Monomial> shifted;
    while (i < a.size() || j < g.size()) {
        if (j < g.size() && !shifted)
            shifted = g[j].mono * m;
        std::strong_ordering cmp = std::strong_ordering::greater;
        if (i == a.size())
            cmp = std::strong_ordering::less;
        else if (j < g.size())
            cmp = ord(a[i].mono, a[i].comp, *shifted, g[j].comp);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(*shifted), g[j].comp, F.neg(F.mul(c, g[j].coeff))});
            shifted.reset();
            ++j;
        } else {
            Scalar s = F.sub(a[i].coeff, F.mul(c, g[j].coeff));
            if (!Field::is_zero(s))
                out.push_back({a[i].mono, a[i].comp, std::move(s)});
            shifted.reset();
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(ModVec& v, const Field& F)
{
    if (v.empty() || Field::is_one(v.front().coeff))
        return;
    Scalar inv = F.inv(v.front().coeff);
    for (auto& t : v)
        t.coeff = F.mul(t.coeff, inv);
}

struct StepCounter {
    long steps = 0;
    long max_steps = 0;

    void tick()
    {
        if (++steps > max_steps)
            throw ResourceError("Groebner computation exceeded the reduction-step budget (" +
                                std::to_string(max_steps) + ")");
    }
};

// Full reduction of f against monic elements of G, skipping index `skip`.
ModVec reduce_full(ModVec f, const std::vector<ModVec>& G, const TermOrder& ord, const Field& F,
                   StepCounter& counter, std::size_t skip = static_cast<std::size_t>(-1))
{
    ModVec result;
    std::size_t pos = 0;
    while (pos < f.size()) {
        const ModTerm& t = f[pos];
        const ModVec* reducer = nullptr;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == skip || G[k].empty())
                continue;
            const ModTerm& lt = G[k].front();
            if (lt.comp == t.comp && lt.mono.divides(t.mono)) {
                reducer = &G[k];
                break;
            }
        }
        if (reducer) {
            counter.tick();
            Monomial m = t.mono / reducer->front().mono;
            Scalar c = t.coeff;
            f = sub_mul(std::span<const ModTerm>(f).subspan(pos), c, m, *reducer, ord, F);
            pos = 0;
        } else {
            result.push_back(std::move(f[pos]));
            ++pos;
        }
    }
    return result;
}

class Engine {
public:
    Engine(RingPtr ring, std::size_t rank, std::size_t elim, const Budget& budget)
        : ring_(std::move(ring)), F_(ring_->field()), ord_{&ring_->order(), elim}, rank_(rank), elim_(elim),
          budget_(budget), pairs_(PairLess{ord_})
    {
        counter_.max_steps = budget.max_steps;
    }

    std::shared_ptr<BasisData> run(std::vector<ModVec> inputs)
    {
        std::erase_if(inputs, [](const ModVec& v) { return v.empty(); });
        std::stable_sort(inputs.begin(), inputs.end(),
                         [&](const ModVec& a, const ModVec& b) { return ord_(a.front(), b.front()) < 0; });
        for (auto& v : inputs) {
            ModVec h = reduce_full(std::move(v), G_, ord_, F_, counter_);
            if (!h.empty())
                add(std::move(h));
        }
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            pending_.erase({p.i, p.j});
            if (chain_criterion(p))
                continue;
            if (p.lcm.degree() > budget_.max_degree)
                throw ResourceError("Groebner computation exceeded the degree budget (" +
                                    std::to_string(budget_.max_degree) + ")");
            ModVec s = spoly(p);
            ModVec h = reduce_full(std::move(s), G_, ord_, F_, counter_);
            if (!h.empty())
                add(std::move(h));
        }
        return interreduce();
    }

private:
    struct Pair {
        int degree;
        Monomial lcm;
        std::uint32_t comp;
        std::size_t i, j;
    };

    struct PairLess {
        TermOrder ord;
        bool operator()(const Pair& a, const Pair& b) const
        {
            if (a.degree != b.degree)
                return a.degree < b.degree;
            auto c = ord(a.lcm, a.comp, b.lcm, b.comp);
            if (c != 0)
                return c < 0;
            if (a.j != b.j)
                return a.j < b.j;
            return a.i < b.i;
        }
    };

    void add(ModVec h)
    {
        make_monic(h, F_);
        std::size_t idx = G_.size();
        const ModTerm& lt = h.front();
        for (std::size_t k = 0; k < idx; ++k) {
            const ModTerm& lk = G_[k].front();
            if (lk.comp != lt.comp)
                continue;
            if (rank_ == 1 && lk.mono.coprime(lt.mono))
                continue;
            Monomial l = lk.mono.lcm(lt.mono);
            int d = l.degree();
            pairs_.insert(Pair{d, std::move(l), lt.comp, k, idx});
            pending_.insert({k, idx});
        }
        G_.push_back(std::move(h));
    }

    bool is_pending(std::size_t a, std::size_t b) const
    {
        return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    bool chain_criterion(const Pair& p) const
    {
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (k == p.i || k == p.j)
                continue;
            const ModTerm& lk = G_[k].front();
            if (lk.comp != p.comp || !lk.mono.divides(p.lcm))
                continue;
            if (!is_pending(p.i, k) && !is_pending(p.j, k))
                return true;
        }
        return false;
    }

    ModVec spoly(const Pair& p)
    {
        const ModVec& gi = G_[p.i];
        const ModVec& gj = G_[p.j];
        ModVec left;
        Monomial mi = p.lcm / gi.front().mono;
        left.reserve(gi.size());
        for (const auto& t : gi)
            left.push_back({t.mono * mi, t.comp, t.coeff});
        return sub_mul(left, Scalar(1), p.lcm / gj.front().mono, gj, ord_, F_);
    }

    std::shared_ptr<BasisData> interreduce()
    {
        std::vector<std::size_t> idx(G_.size());
        for (std::size_t k = 0; k < idx.size(); ++k)
            idx[k] = k;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return ord_(G_[a].front(), G_[b].front()) < 0; });
        std::vector<ModVec> kept;
        for (std::size_t k : idx) {
            const ModTerm& lt = G_[k].front();
            bool redundant = false;
            for (const auto& g : kept)
                if (g.front().comp == lt.comp && g.front().mono.divides(lt.mono)) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                kept.push_back(G_[k]);
        }
        auto data = std::make_shared<BasisData>();
        data->ring = ring_;
        data->rank = rank_;
        data->elim = elim_;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            ModVec r = reduce_full(kept[k], kept, ord_, F_, counter_, k);
            make_monic(r, F_);
            data->elems.push_back(std::move(r));
        }
        std::sort(data->elems.begin(), data->elems.end(),
                  [&](const ModVec& a, const ModVec& b) { return ord_(a.front(), b.front()) > 0; });
        return data;
    }

    RingPtr ring_;
    const Field& F_;
    TermOrder ord_;
    std::size_t rank_;
    std::size_t elim_;
    Budget budget_;
    StepCounter counter_;
    std::vector<ModVec> G_;
    std::set<Pair, PairLess> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

void check_quotient(const RingPtr& ring, const GroebnerBasis* quotient)
{
    if (!ring)
        throw StructuralError("missing ambient ring");
    if (quotient && quotient->ring() && !(*quotient->ring() == *ring))
        throw StructuralError("quotient ideal lives in a different ring");
}

}  // namespace

// ---------------------------------------------------------------------------

const RingPtr& ModuleBasis::ring() const { return data_->ring; }
std::size_t ModuleBasis::rank() const { return data_->rank; }
std::size_t ModuleBasis::size() const { return data_->elems.size(); }

std::vector<ModuleElement> ModuleBasis::elements() const
{
    std::vector<ModuleElement> out;
    for (const auto& e : data_->elems)
        out.push_back(from_modvec(e, data_->ring, data_->rank));
    return out;
}

std::pair<Monomial, std::size_t> ModuleBasis::leading(std::size_t i) const
{
    const auto& t = data_->elems.at(i).front();
    return {t.mono, t.comp};
}

ModuleElement ModuleBasis::reduce(const ModuleElement& v) const
{
    if (v.rank() != data_->rank)
        throw StructuralError("module element rank does not match the basis");
    auto ord = data_->order();
    StepCounter counter{0, Budget::current().max_steps};
    ModVec r = reduce_full(to_modvec(v, ord), data_->elems, ord, data_->ring->field(), counter);
    return from_modvec(r, data_->ring, data_->rank);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const
{
    std::vector<Monomial> out;
    for (const auto& p : elements_)
        out.push_back(p.leading_monomial());
    return out;
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const
{
    if (!ring_ || !f.ring() || !(*f.ring() == *ring_))
        throw StructuralError("polynomial and Groebner basis live in different rings");
    if (elements_.empty() || f.is_zero())
        return f;
    return basis_.reduce(ModuleElement(ring_, std::vector<Polynomial>{f}))[0];
}

GroebnerBasis buchberger(RingPtr ring, std::vector<Polynomial> gens, const GroebnerBasis* quotient,
                         const Budget& budget)
{
    check_quotient(ring, quotient);
    std::vector<ModuleElement> vecs;
    for (auto& g : gens) {
        if (!g.ring() || !(*g.ring() == *ring))
            throw StructuralError("generator lives in a different ring");
        vecs.emplace_back(ring, std::vector<Polynomial>{std::move(g)});
    }
    GroebnerBasis gb;
    gb.ring_ = ring;
    gb.basis_ = module_buchberger(ring, 1, std::move(vecs), quotient, {}, budget);
    for (const auto& e : gb.basis_.elements())
        gb.elements_.push_back(e[0]);
    return gb;
}

ModuleBasis module_buchberger(RingPtr ring, std::size_t rank, std::vector<ModuleElement> gens,
                              const GroebnerBasis* quotient, ModuleOrder order, const Budget& budget)
{
    check_quotient(ring, quotient);
    TermOrder ord{&ring->order(), order.elimination_components};
    std::vector<ModVec> inputs;
    if (quotient)
        for (const auto& q : quotient->elements())
            for (std::size_t k = 0; k < rank; ++k) {
                ModuleElement v(ring, rank);
                v[k] = q;
                inputs.push_back(to_modvec(v, ord));
            }
    for (const auto& g : gens) {
        if (g.rank() != rank)
            throw StructuralError("generator rank does not match the module rank");
        inputs.push_back(to_modvec(g, ord));
    }
    Engine engine(ring, rank, order.elimination_components, budget);
    return ModuleBasis(engine.run(std::move(inputs)));
}

std::vector<ModuleElement> syzygies(RingPtr ring, std::size_t rank, std::span<const ModuleElement> gens,
                                    const GroebnerBasis* quotient, const Budget& budget)
{
    check_quotient(ring, quotient);
    const std::size_t m = gens.size();
    const std::size_t total = rank + m;
    // Augmented generators (g_i, e_i) in P^{rank+m}; eliminating the first
    // `rank` coordinates leaves the syzygy module in the last m.
    std::vector<ModuleElement> aug;
    for (std::size_t i = 0; i < m; ++i) {
        if (gens[i].rank() != rank)
            throw StructuralError("generator rank does not match the module rank");
        ModuleElement v(ring, total);
        for (std::size_t k = 0; k < rank; ++k)
            v[k] = gens[i][k];
        v[rank + i] = Polynomial::constant(ring, Scalar(1));
        aug.push_back(std::move(v));
    }
    if (quotient)
        for (const auto& q : quotient->elements())
            for (std::size_t k = 0; k < total; ++k) {
                ModuleElement v(ring, total);
                v[k] = q;
                aug.push_back(std::move(v));
            }
    TermOrder ord{&ring->order(), rank};
    std::vector<ModVec> inputs;
    for (const auto& v : aug)
        inputs.push_back(to_modvec(v, ord));
    Engine engine(ring, total, rank, budget);
    auto data = engine.run(std::move(inputs));

    std::vector<ModuleElement> out;
    for (const auto& e : data->elems) {
        if (e.front().comp < rank)
            continue;
        ModuleElement s = from_modvec(e, ring, m, rank);
        if (quotient) {
            for (std::size_t k = 0; k < m; ++k)
                s[k] = quotient->reduce(s[k]);
            if (s.is_zero())
                continue;
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace singulant
