#include "singulant/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace singulant {

const GroebnerBasis* quotient_basis(const RingPresentation& R)
{
    return R.is_polynomial_ring() ? nullptr : &R.defining_gb();
}

namespace {

ModuleElement reduce_coords(const RingPresentation& R, ModuleElement v)
{
    for (std::size_t i = 0; i < v.rank(); ++i)
        v[i] = R.reduce(v[i]);
    return v;
}

int column_degree(const ModuleElement& v)
{
    int d = -1;
    for (const auto& c : v.coords())
        d = std::max(d, c.total_degree());
    return d;
}

// Drop generators lying in the span of earlier ones, lowest degrees first.
std::vector<ModuleElement> prune(const RingPresentation& R, std::size_t rank, std::vector<ModuleElement> gens)
{
    std::vector<ModuleElement> nonzero;
    for (auto& g : gens) {
        g = reduce_coords(R, std::move(g));
        if (!g.is_zero())
            nonzero.push_back(std::move(g));
    }
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [](const ModuleElement& a, const ModuleElement& b) { return column_degree(a) < column_degree(b); });
    std::vector<ModuleElement> kept;
    ModuleBasis span;
    for (auto& g : nonzero) {
        if (!kept.empty() && span.contains(g))
            continue;
        kept.push_back(g);
        span = module_buchberger(R.ring(), rank, kept, quotient_basis(R));
    }
    return kept;
}

// Leading (monomial, coordinate) of a nonzero column.
std::pair<Monomial, std::size_t> leading_of(const MonomialOrder& ord, const ModuleElement& v)
{
    std::pair<Monomial, std::size_t> best;
    bool have = false;
    for (std::size_t k = 0; k < v.rank(); ++k) {
        if (v[k].is_zero())
            continue;
        const auto& m = v[k].leading_monomial();
        if (!have || ord.compare(m, best.first) > 0) {
            best = {m, k};
            have = true;
        }
    }
    return best;
}

PolyMatrix drop(const PolyMatrix& m, std::size_t row, std::size_t col)
{
    std::size_t r = m.rows() - (row < m.rows() ? 1 : 0);
    std::size_t c = m.cols() - (col < m.cols() ? 1 : 0);
    PolyMatrix out(m.ring(), r, c);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == row)
            continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == col)
                continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

constexpr std::size_t none = static_cast<std::size_t>(-1);

// Permute the basis of every F_i (i >= 1) so that the columns of d_i come
// in decreasing leading-term order.
void normalize_columns(FreeResolution& res)
{
    const auto& ord = res.ring.ring()->order();
    for (std::size_t i = 0; i < res.differentials.size(); ++i) {
        auto& d = res.differentials[i];
        auto cols = d.columns();
        std::vector<std::size_t> perm(cols.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            if (cols[a].is_zero() || cols[b].is_zero())
                return !cols[a].is_zero() && cols[b].is_zero();
            auto la = leading_of(ord, cols[a]);
            auto lb = leading_of(ord, cols[b]);
            auto c = ord.compare(la.first, lb.first);
            if (c != 0)
                return c > 0;
            return la.second < lb.second;
        });
        PolyMatrix nd(d.ring(), d.rows(), d.cols());
        for (std::size_t j = 0; j < perm.size(); ++j)
            for (std::size_t r = 0; r < d.rows(); ++r)
                nd(r, j) = d(r, perm[j]);
        d = std::move(nd);
        if (i + 1 < res.differentials.size()) {
            auto& next = res.differentials[i + 1];
            PolyMatrix nn(next.ring(), next.rows(), next.cols());
            for (std::size_t r = 0; r < perm.size(); ++r)
                for (std::size_t c = 0; c < next.cols(); ++c)
                    nn(r, c) = next(perm[r], c);
            next = std::move(nn);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------

FinitelyPresentedModule::FinitelyPresentedModule(RingPresentation ring, PolyMatrix presentation, std::vector<int> shifts)
    : state_(std::make_shared<State>())
{
    if (presentation.ring() && !(*presentation.ring() == *ring.ring()))
        throw StructuralError("presentation matrix lives in a different ring");
    if (!shifts.empty() && shifts.size() != presentation.rows())
        throw StructuralError("one shift per generator is required");
    std::vector<ModuleElement> cols;
    for (auto& c : presentation.columns()) {
        auto r = reduce_coords(ring, std::move(c));
        if (!r.is_zero())
            cols.push_back(std::move(r));
    }
    state_->matrix = PolyMatrix::from_columns(ring.ring(), presentation.rows(), cols);
    state_->ring = std::move(ring);
    state_->shifts = std::move(shifts);
}

FinitelyPresentedModule FinitelyPresentedModule::free(const RingPresentation& ring, std::size_t rank)
{
    return FinitelyPresentedModule(ring, PolyMatrix(ring.ring(), rank, 0));
}

FinitelyPresentedModule FinitelyPresentedModule::cyclic(const IdealHandle& I)
{
    const auto& gens = I.generators();
    PolyMatrix m(I.ring().ring(), 1, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        m(0, j) = gens[j];
    return FinitelyPresentedModule(I.ring(), std::move(m));
}

FinitelyPresentedModule FinitelyPresentedModule::cyclic(const RingPresentation& ring, std::string_view gens)
{
    return cyclic(IdealHandle::from_text(ring, gens));
}

const ModuleBasis& FinitelyPresentedModule::relation_basis() const
{
    std::call_once(state_->once, [&] {
        state_->basis = module_buchberger(ring().ring(), generator_count(), presentation().columns(),
                                          quotient_basis(ring()));
    });
    return state_->basis;
}

bool FinitelyPresentedModule::is_zero() const
{
    for (std::size_t i = 0; i < generator_count(); ++i)
        if (!relation_basis().contains(ModuleElement::unit(ring().ring(), generator_count(), i)))
            return false;
    return true;
}

bool FinitelyPresentedModule::graded() const
{
    if (!ring().graded())
        return false;
    for (const auto& c : presentation().columns()) {
        // Homogeneous column: every coordinate homogeneous, and the degrees
        // agree once the generator shifts are added.
        std::optional<int> deg;
        for (std::size_t k = 0; k < c.rank(); ++k) {
            if (c[k].is_zero())
                continue;
            if (!c[k].is_homogeneous())
                return false;
            int d = c[k].total_degree() + (shifts().empty() ? 0 : shifts()[k]);
            if (deg && *deg != d)
                return false;
            deg = d;
        }
    }
    return true;
}

std::string FinitelyPresentedModule::to_string() const
{
    std::string s = "coker [";
    for (std::size_t i = 0; i < presentation().rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < presentation().cols(); ++j)
            s += (j ? ", " : "") + ring().str(presentation()(i, j));
        s += "]";
    }
    return s + "] over " + ring().to_string();
}

// ---------------------------------------------------------------------------

FreeResolution raw_resolution(const FinitelyPresentedModule& M, std::size_t L)
{
    const auto& R = M.ring();
    FreeResolution res;
    res.ring = R;
    res.ranks.push_back(M.generator_count());
    std::vector<ModuleElement> current;
    try {
        current = prune(R, M.generator_count(), M.presentation().columns());
        for (std::size_t i = 1; i <= L; ++i) {
            std::size_t rows = res.ranks.back();
            res.differentials.push_back(PolyMatrix::from_columns(R.ring(), rows, current));
            res.ranks.push_back(current.size());
            if (current.empty()) {
                res.complete = true;
                break;
            }
            if (i == L)
                break;
            auto syz = syzygies(R.ring(), rows, current, quotient_basis(R));
            current = prune(R, current.size(), std::move(syz));
        }
    } catch (const ResourceError& e) {
        throw ResolutionBudgetError(e.what(), std::make_shared<FreeResolution>(res));
    }
    res.minimal = entries_in_maximal_ideal(res);
    return res;
}

FreeResolution minimalize(FreeResolution res)
{
    const auto& R = res.ring;
    const Field& F = R.field();
    auto& ds = res.differentials;
    auto reduce_matrix = [&](PolyMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = R.reduce(m(i, j));
    };
    for (auto& d : ds)
        reduce_matrix(d);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t idx = 0; idx < ds.size() && !changed; ++idx) {
            PolyMatrix& A = ds[idx];
            for (std::size_t a = 0; a < A.rows() && !changed; ++a)
                for (std::size_t b = 0; b < A.cols() && !changed; ++b) {
                    if (A(a, b).is_zero() || !A(a, b).is_constant())
                        continue;
                    Scalar c = A(a, b).constant_term();
                    // Column operations on F_i: col_j -= t_j col_b.
                    std::vector<Scalar> t(A.cols());
                    for (std::size_t j = 0; j < A.cols(); ++j) {
                        if (j == b || A(a, j).is_zero())
                            continue;
                        Polynomial tj = A(a, j).scaled(F.inv(c));
                        for (std::size_t r = 0; r < A.rows(); ++r)
                            A(r, j) = R.reduce(A(r, j) - tj * A(r, b));
                        if (idx + 1 < ds.size()) {
                            PolyMatrix& N = ds[idx + 1];
                            for (std::size_t k = 0; k < N.cols(); ++k)
                                N(b, k) = R.reduce(N(b, k) + tj * N(j, k));
                        }
                    }
                    // Row operations on F_{i-1}: row_k -= s_k row_a.
                    for (std::size_t k = 0; k < A.rows(); ++k) {
                        if (k == a || A(k, b).is_zero())
                            continue;
                        Polynomial sk = A(k, b).scaled(F.inv(c));
                        for (std::size_t j = 0; j < A.cols(); ++j)
                            A(k, j) = R.reduce(A(k, j) - sk * A(a, j));
                        if (idx > 0) {
                            PolyMatrix& P = ds[idx - 1];
                            for (std::size_t r = 0; r < P.rows(); ++r)
                                P(r, a) = R.reduce(P(r, a) + sk * P(r, k));
                        }
                    }
                    A = drop(A, a, b);
                    if (idx > 0)
                        ds[idx - 1] = drop(ds[idx - 1], none, a);
                    if (idx + 1 < ds.size())
                        ds[idx + 1] = drop(ds[idx + 1], b, none);
                    res.ranks[idx] -= 1;
                    res.ranks[idx + 1] -= 1;
                    changed = true;
                }
        }
    }
    res.minimal = entries_in_maximal_ideal(res);
    return res;
}

FreeResolution free_resolution(const FinitelyPresentedModule& M, std::size_t L)
{
    // One extra step so that unit entries of d_{L+1} are cancelled too.
    FreeResolution res;
    try {
        res = minimalize(raw_resolution(M, L + 1));
    } catch (const ResolutionBudgetError& e) {
        throw ResolutionBudgetError(e.what(), std::make_shared<FreeResolution>(minimalize(e.partial())));
    }
    if (res.differentials.size() > L) {
        res.differentials.resize(L);
        res.ranks.resize(L + 1);
        res.complete = false;
    }
    // A trailing zero module only marks the end of a finite resolution.
    while (!res.differentials.empty() && res.ranks.back() == 0) {
        res.differentials.pop_back();
        res.ranks.pop_back();
        res.complete = true;
    }
    normalize_columns(res);
    res.minimal = entries_in_maximal_ideal(res);
    return res;
}

bool entries_in_maximal_ideal(const FreeResolution& res)
{
    for (const auto& d : res.differentials)
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (!Field::is_zero(d(i, j).constant_term()))
                    return false;
    return true;
}

bool composes_to_zero(const FreeResolution& res)
{
    for (std::size_t i = 1; i < res.differentials.size(); ++i) {
        auto prod = res.differentials[i - 1] * res.differentials[i];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (!res.ring.reduce(prod(r, c)).is_zero())
                    return false;
    }
    return true;
}

bool exactness_certified(const FreeResolution& res)
{
    const auto& R = res.ring;
    for (std::size_t i = 1; i < res.differentials.size(); ++i) {
        const auto& d = res.differentials[i - 1];
        const auto& next = res.differentials[i];
        auto kernel = syzygies(R.ring(), d.rows(), d.columns(), quotient_basis(R));
        auto image = module_buchberger(R.ring(), next.rows(), next.columns(), quotient_basis(R));
        for (const auto& k : kernel)
            if (!image.contains(k))
                return false;
    }
    return true;
}

FinitelyPresentedModule syzygy_module(const FinitelyPresentedModule& M, std::size_t n)
{
    if (n == 0)
        throw PreconditionError("syzygy index must be at least 1");
    auto res = free_resolution(M, n + 1);
    if (res.ranks.size() <= n)
        return FinitelyPresentedModule::free(M.ring(), 0);
    std::size_t rows = res.ranks[n];
    if (res.differentials.size() > n)
        return FinitelyPresentedModule(M.ring(), res.differentials[n]);
    return FinitelyPresentedModule(M.ring(), PolyMatrix(M.ring().ring(), rows, 0));
}

FinitelyPresentedModule restrict_to_ambient(const FinitelyPresentedModule& M)
{
    const auto& R = M.ring();
    RingPresentation P(R.field(), R.names(), {}, R.ring()->order());
    std::vector<ModuleElement> cols = M.presentation().columns();
    std::size_t r0 = M.generator_count();
    for (const auto& f : R.defining())
        for (std::size_t k = 0; k < r0; ++k) {
            ModuleElement v(R.ring(), r0);
            v[k] = f;
            cols.push_back(std::move(v));
        }
    return FinitelyPresentedModule(P, PolyMatrix::from_columns(P.ring(), r0, cols), M.shifts());
}

int projective_dimension_over_P(const FinitelyPresentedModule& M)
{
    auto over_P = restrict_to_ambient(M);
    if (over_P.is_zero())
        throw PreconditionError("projective dimension of the zero module");
    auto res = free_resolution(over_P, over_P.ring().nvars() + 1);
    int pd = 0;
    for (std::size_t i = 0; i < res.ranks.size(); ++i)
        if (res.ranks[i] > 0)
            pd = static_cast<int>(i);
    return pd;
}

int depth(const FinitelyPresentedModule& M)
{
    return static_cast<int>(M.ring().nvars()) - projective_dimension_over_P(M);
}

}  // namespace singulant
