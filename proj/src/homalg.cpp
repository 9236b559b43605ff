#include "singulant/homalg.hpp"

#include <omp.h>

#include <random>

namespace singulant {

namespace {

std::vector<ModuleElement> project(const std::vector<ModuleElement>& vs, std::size_t first, const RingPresentation& R)
{
    std::vector<ModuleElement> out;
    for (const auto& v : vs) {
        ModuleElement p(R.ring(), first);
        for (std::size_t k = 0; k < first; ++k)
            p[k] = R.reduce(v[k]);
        if (!p.is_zero())
            out.push_back(std::move(p));
    }
    return out;
}

// Columns of `gens` followed by `more`, all of rank `rank`.
std::vector<ModuleElement> concat(std::vector<ModuleElement> gens, const std::vector<ModuleElement>& more)
{
    gens.insert(gens.end(), more.begin(), more.end());
    return gens;
}

// Relations of M^copies, copy c of generator t at index c*s + t.
std::vector<ModuleElement> block_relations(const FinitelyPresentedModule& M, std::size_t copies)
{
    std::size_t s = M.generator_count();
    std::vector<ModuleElement> out;
    for (std::size_t c = 0; c < copies; ++c)
        for (const auto& col : M.presentation().columns()) {
            ModuleElement v(M.ring().ring(), copies * s);
            for (std::size_t t = 0; t < s; ++t)
                v[c * s + t] = col[t];
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i)
        c[i] = i;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

bool Subquotient::is_zero() const
{
    if (cycles.empty())
        return true;
    auto span = module_buchberger(ring.ring(), rank, boundaries, quotient_basis(ring));
    for (const auto& z : cycles)
        if (!span.contains(z))
            return false;
    return true;
}

bool Subquotient::boundaries_in_cycles(const std::vector<ModuleElement>& relations) const
{
    auto span = module_buchberger(ring.ring(), rank, concat(cycles, relations), quotient_basis(ring));
    for (const auto& b : boundaries)
        if (!span.contains(b))
            return false;
    return true;
}

FinitelyPresentedModule Subquotient::present() const
{
    std::size_t m = cycles.size();
    if (m == 0)
        return FinitelyPresentedModule::free(ring, 0);
    auto syz = syzygies(ring.ring(), rank, concat(cycles, boundaries), quotient_basis(ring));
    return FinitelyPresentedModule(ring, PolyMatrix::from_columns(ring.ring(), m, project(syz, m, ring)));
}

bool annihilates(const Polynomial& r, const Subquotient& H)
{
    if (H.cycles.empty())
        return true;
    auto span = module_buchberger(H.ring.ring(), H.rank, H.boundaries, quotient_basis(H.ring));
    for (const auto& z : H.cycles)
        if (!span.contains(z.scaled(r)))
            return false;
    return true;
}

Subquotient cohomology_at(const RingPresentation& R, std::size_t rank, const PolyMatrix* in, const PolyMatrix* out,
                          const std::vector<ModuleElement>& rel_here, const std::vector<ModuleElement>& rel_next)
{
    Subquotient H;
    H.ring = R;
    H.rank = rank;
    if (rank == 0)
        return H;
    if (!out || out->rows() == 0) {
        for (std::size_t k = 0; k < rank; ++k)
            H.cycles.push_back(ModuleElement::unit(R.ring(), rank, k));
    } else {
        auto syz = syzygies(R.ring(), out->rows(), concat(out->columns(), rel_next), quotient_basis(R));
        H.cycles = project(syz, rank, R);
    }
    if (in)
        for (auto& c : in->columns())
            if (!c.is_zero())
                H.boundaries.push_back(std::move(c));
    H.boundaries = concat(std::move(H.boundaries), rel_here);
    return H;
}

std::optional<std::size_t> k_dimension(const FinitelyPresentedModule& M)
{
    std::size_t n = M.ring().nvars();
    std::size_t r = M.generator_count();
    const auto& basis = M.relation_basis();
    std::vector<std::vector<Monomial>> lead(r);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [m, c] = basis.leading(i);
        lead[c].push_back(m);
    }
    std::size_t total = 0;
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<int> bound(n, -1);
        bool unit = false;
        for (const auto& m : lead[c]) {
            if (m.is_one())
                unit = true;
            auto supp = m.support();
            if (supp != 0 && (supp & (supp - 1)) == 0) {
                std::size_t v = static_cast<std::size_t>(__builtin_ctzll(supp));
                if (bound[v] < 0 || m[v] < bound[v])
                    bound[v] = m[v];
            }
        }
        if (unit)
            continue;
        for (int b : bound)
            if (b < 0)
                return std::nullopt;
        std::vector<int> e(n, 0);
        while (true) {
            Monomial m(e);
            bool standard = true;
            for (const auto& l : lead[c])
                if (l.divides(m)) {
                    standard = false;
                    break;
                }
            if (standard)
                ++total;
            std::size_t v = 0;
            while (v < n && ++e[v] >= bound[v])
                e[v++] = 0;
            if (v == n)
                break;
        }
    }
    return total;
}

IdealHandle annihilator(const FinitelyPresentedModule& M)
{
    const auto& R = M.ring();
    std::size_t s = M.generator_count();
    auto rels = M.presentation().columns();
    std::optional<IdealHandle> acc;
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<ModuleElement> gens{ModuleElement::unit(R.ring(), s, k)};
        auto syz = syzygies(R.ring(), s, concat(gens, rels), quotient_basis(R));
        std::vector<Polynomial> coeffs;
        for (const auto& v : syz) {
            auto c = R.reduce(v[0]);
            if (!c.is_zero())
                coeffs.push_back(std::move(c));
        }
        IdealHandle part(R, std::move(coeffs));
        acc = acc ? intersection(*acc, part) : part;
    }
    return acc ? *acc : IdealHandle::unit(R);
}

// ---------------------------------------------------------------------------

PolyMatrix koszul_differential(const std::vector<Polynomial>& f, std::size_t i, std::size_t s)
{
    if (f.empty())
        throw PreconditionError("Koszul complex of an empty sequence");
    const auto& ring = f.front().ring();
    std::size_t l = f.size();
    auto src = subsets(l, i);
    auto dst = subsets(l, i + 1);
    PolyMatrix d(ring, dst.size() * s, src.size() * s);
    for (std::size_t a = 0; a < dst.size(); ++a)
        for (std::size_t pos = 0; pos < dst[a].size(); ++pos) {
            std::vector<std::size_t> S = dst[a];
            std::size_t j = S[pos];
            S.erase(S.begin() + static_cast<long>(pos));
            auto b = static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), S) - src.begin());
            Polynomial entry = pos % 2 ? -f[j] : f[j];
            for (std::size_t t = 0; t < s; ++t)
                d(a * s + t, b * s + t) = entry;
        }
    return d;
}

Subquotient koszul_subquotient(const std::vector<Polynomial>& f, const FinitelyPresentedModule& M, std::size_t i)
{
    std::size_t l = f.size();
    if (i > l)
        throw PreconditionError("Koszul degree out of range");
    std::size_t s = M.generator_count();
    auto binom = [&](std::size_t k) { return subsets(l, k).size(); };
    std::optional<PolyMatrix> in, out;
    if (i > 0)
        in = koszul_differential(f, i - 1, s);
    if (i < l)
        out = koszul_differential(f, i, s);
    return cohomology_at(M.ring(), binom(i) * s, in ? &*in : nullptr, out ? &*out : nullptr,
                         block_relations(M, binom(i)), i < l ? block_relations(M, binom(i + 1))
                                                             : std::vector<ModuleElement>{});
}

FinitelyPresentedModule koszul_cohomology(const std::vector<Polynomial>& f, const FinitelyPresentedModule& M,
                                          std::size_t i)
{
    return koszul_subquotient(f, M, i).present();
}

bool koszul_support_check(const std::vector<Polynomial>& f, const FinitelyPresentedModule& M)
{
    auto annM = annihilator(M);
    std::vector<Polynomial> J = annM.generators();
    J.insert(J.end(), f.begin(), f.end());
    for (std::size_t i = 0; i <= f.size(); ++i) {
        auto H = koszul_cohomology(f, M, i);
        if (H.is_zero())
            continue;
        auto A = annihilator(H);
        for (const auto& g : J)
            if (!radical_membership(g, A))
                return false;
    }
    return true;
}

int koszul_depth(const FinitelyPresentedModule& M)
{
    if (M.is_zero())
        throw PreconditionError("depth of the zero module");
    const auto& R = M.ring();
    if (R.nvars() == 0)
        return 0;
    std::vector<Polynomial> x;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        x.push_back(R.variable(i));
    for (std::size_t i = 0; i <= x.size(); ++i)
        if (!koszul_subquotient(x, M, i).is_zero())
            return static_cast<int>(i);
    throw StructuralError("Koszul cohomology of a nonzero module vanished identically");
}

// ---------------------------------------------------------------------------

ExtModule ext_module(const FreeResolution& F, const FinitelyPresentedModule& N, std::size_t i)
{
    if (F.length() < i + 1 && !F.complete)
        throw PreconditionError("resolution too short for Ext^" + std::to_string(i));
    auto beta = [&](std::size_t j) { return j < F.ranks.size() ? F.ranks[j] : std::size_t{0}; };
    std::size_t s = N.generator_count();
    std::optional<PolyMatrix> in, out;
    if (i >= 1 && i <= F.length())
        in = F.d(i).transpose().kron_identity(s);
    if (i + 1 <= F.length())
        out = F.d(i + 1).transpose().kron_identity(s);
    ExtModule E;
    E.degree = i;
    E.module = cohomology_at(N.ring(), beta(i) * s, in ? &*in : nullptr, out ? &*out : nullptr,
                             block_relations(N, beta(i)), block_relations(N, beta(i + 1)));
    return E;
}

ExtModule ext_module(const FinitelyPresentedModule& M, const FinitelyPresentedModule& N, std::size_t i)
{
    if (!(*M.ring().ring() == *N.ring().ring()))
        throw StructuralError("Ext of modules over different rings");
    return ext_module(free_resolution(M, i + 1), N, i);
}

std::optional<std::size_t> ext_k_dimension(const ExtModule& E)
{
    return k_dimension(E.module.present());
}

bool annihilates_ext(const Polynomial& r, const FinitelyPresentedModule& M, const FinitelyPresentedModule& N,
                     std::size_t i)
{
    return annihilates(r, ext_module(M, N, i).module);
}

bool stable_annihilation_test(const Polynomial& r, const FinitelyPresentedModule& M)
{
    if (M.is_zero())
        throw PreconditionError("stable annihilation test needs a nonzero module");
    auto F = free_resolution(M, 2);
    FinitelyPresentedModule omega =
        F.length() >= 2 ? FinitelyPresentedModule(M.ring(), F.d(2))
                        : FinitelyPresentedModule::free(M.ring(), F.ranks.size() > 1 ? F.ranks[1] : 0);
    return annihilates(r, ext_module(F, omega, 1).module);
}

bool shifted_stable_annihilation_test(const Polynomial& r, const FinitelyPresentedModule& M, std::size_t shift)
{
    auto X = shift == 0 ? M : syzygy_module(M, shift);
    if (X.is_zero())
        return true;
    return stable_annihilation_test(r, X);
}

// ---------------------------------------------------------------------------

std::vector<CorpusModule> default_corpus(const RingPresentation& R, std::uint64_t seed)
{
    std::vector<CorpusModule> corpus;
    auto m = IdealHandle::maximal(R);
    auto k = FinitelyPresentedModule::cyclic(m);
    corpus.push_back({"k", k});
    corpus.push_back({"R", FinitelyPresentedModule::free(R, 1)});
    for (std::size_t i = 0; i < R.nvars(); ++i)
        corpus.push_back({"R/(" + R.names()[i] + ")", FinitelyPresentedModule::cyclic(IdealHandle(R, {R.variable(i)}))});
    std::vector<Polynomial> squares;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        for (std::size_t j = i; j < R.nvars(); ++j)
            squares.push_back(R.variable(i) * R.variable(j));
    corpus.push_back({"R/m^2", FinitelyPresentedModule::cyclic(IdealHandle(R, squares))});
    corpus.push_back({"Omega^1(k)", syzygy_module(k, 1)});

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    PolyMatrix A(R.ring(), 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (coin(rng) == 0)
                continue;
            Polynomial e = R.zero();
            for (std::size_t v = 0; v < R.nvars(); ++v)
                e += R.variable(v).scaled(Scalar(coeff(rng)));
            A(i, j) = e;
        }
    corpus.push_back({"coker(random 2x3, seed " + std::to_string(seed) + ")", FinitelyPresentedModule(R, A)});
    return corpus;
}

std::string to_string(WitnessOutcome o)
{
    switch (o) {
    case WitnessOutcome::Pass:
        return "pass";
    case WitnessOutcome::Fail:
        return "fail";
    case WitnessOutcome::Budget:
        return "budget-exhausted";
    case WitnessOutcome::Error:
        return "error";
    }
    return "error";
}

bool WitnessReport::excluded() const
{
    for (const auto& row : outcomes)
        for (auto o : row)
            if (o == WitnessOutcome::Fail)
                return true;
    return false;
}

bool WitnessReport::all_pass() const
{
    for (const auto& row : outcomes)
        for (auto o : row)
            if (o != WitnessOutcome::Pass)
                return false;
    return true;
}

namespace {

struct WitnessJob {
    std::vector<std::optional<FreeResolution>> resolutions;
    std::vector<std::string> resolution_errors;
    std::vector<WitnessOutcome> resolution_outcome;
    WitnessReport report;
};

WitnessJob prepare(std::size_t n, const std::vector<CorpusModule>& corpus)
{
    WitnessJob job;
    std::size_t c = corpus.size();
    job.resolutions.resize(c);
    job.resolution_errors.resize(c);
    job.resolution_outcome.assign(c, WitnessOutcome::Pass);
    job.report.degree = n;
    job.report.outcomes.assign(c, std::vector<WitnessOutcome>(c, WitnessOutcome::Pass));
    job.report.messages.assign(c, std::vector<std::string>(c));
    for (std::size_t a = 0; a < c; ++a) {
        const auto& M = corpus[a].module;
        M.ring().defining_gb();
        M.relation_basis();
        try {
            job.resolutions[a] = free_resolution(M, n + 1);
        } catch (const ResourceError& e) {
            job.resolution_outcome[a] = WitnessOutcome::Budget;
            job.resolution_errors[a] = e.what();
        } catch (const std::exception& e) {
            job.resolution_outcome[a] = WitnessOutcome::Error;
            job.resolution_errors[a] = e.what();
        }
    }
    return job;
}

void evaluate(const Polynomial& r, const std::vector<CorpusModule>& corpus, WitnessJob& job, std::size_t idx)
{
    std::size_t c = corpus.size();
    std::size_t a = idx / c, b = idx % c;
    auto& outcome = job.report.outcomes[a][b];
    auto& message = job.report.messages[a][b];
    if (!job.resolutions[a]) {
        outcome = job.resolution_outcome[a];
        message = job.resolution_errors[a];
        return;
    }
    try {
        auto E = ext_module(*job.resolutions[a], corpus[b].module, job.report.degree);
        outcome = annihilates(r, E.module) ? WitnessOutcome::Pass : WitnessOutcome::Fail;
    } catch (const ResourceError& e) {
        outcome = WitnessOutcome::Budget;
        message = e.what();
    } catch (const std::exception& e) {
        outcome = WitnessOutcome::Error;
        message = e.what();
    }
}

}  // namespace

WitnessReport ca_witness_serial(const Polynomial& r, std::size_t n, const std::vector<CorpusModule>& corpus)
{
    auto job = prepare(n, corpus);
    for (std::size_t idx = 0; idx < corpus.size() * corpus.size(); ++idx)
        evaluate(r, corpus, job, idx);
    return job.report;
}

WitnessReport ca_witness(const Polynomial& r, std::size_t n, const std::vector<CorpusModule>& corpus)
{
    auto job = prepare(n, corpus);
    for (const auto& N : corpus)
        N.module.relation_basis();
    auto total = static_cast<long>(corpus.size() * corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx)
        evaluate(r, corpus, job, static_cast<std::size_t>(idx));
    return job.report;
}

}  // namespace singulant
