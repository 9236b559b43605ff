// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--expect-fail N ...]
// Exit status is 0 exactly when the set of failing criteria equals the set
// given with --expect-fail (empty by default).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "singulant/homalg.hpp"
#include "singulant/jacobian.hpp"
#include "singulant/report.hpp"

using namespace singulant;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the outcome of one criterion. Checks short-circuit nothing: all
// failures are reported.
struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
    void timed(double limit, double elapsed, const std::string& what)
    {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s %.3fs (limit %.1fs)", what.c_str(), elapsed, limit);
        notes.push_back(buf);
        check(elapsed < limit, std::string(buf) + " exceeded");
    }
};

RingPresentation ring_of(std::vector<std::string> names, std::vector<std::string> defining)
{
    return RingPresentation::from_text(Field::rationals(), std::move(names), defining);
}

RingPresentation example_ring()
{
    return ring_of({"x", "y"}, {"x^2", "x*y"});
}

RingPresentation fail_ring()
{
    return ring_of({"x", "y", "z", "w"}, {"x^2", "y*z", "y*w"});
}

std::vector<std::size_t> support(const Polynomial& f)
{
    std::set<std::size_t> s;
    for (const auto& t : f.terms())
        for (std::size_t v = 0; v < t.mono.exponents().size(); ++v)
            if (t.mono.exponents()[v] > 0)
                s.insert(v);
    return {s.begin(), s.end()};
}

// Minimal primes of a monomial ideal by brute force over variable subsets:
// a subset S generates a prime containing I iff every generator uses some
// variable of S.
std::vector<std::vector<std::size_t>> subset_prime_oracle(const std::vector<Polynomial>& gens, std::size_t n)
{
    std::vector<unsigned> containing;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool all = true;
        for (const auto& g : gens) {
            bool hit = false;
            for (auto v : support(g))
                hit = hit || (mask >> v & 1u);
            all = all && hit;
        }
        if (all)
            containing.push_back(mask);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto a : containing) {
        bool minimal = true;
        for (auto b : containing)
            minimal = minimal && !(b != a && (b & a) == b);
        if (!minimal)
            continue;
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < n; ++v)
            if (a >> v & 1u)
                vars.push_back(v);
        out.push_back(vars);
    }
    return out;
}

std::vector<FreeResolution> produced_resolutions;

// 1. Jacobian ideals.
void jacobian_goldens(Criterion& c)
{
    {
        auto t0 = Clock::now();
        auto S = fail_ring();
        auto jac = jacobian_ideal(S);
        auto expected = IdealHandle::from_text(S, "(x*y, x*z, x*w, y^2)");
        c.check(ideal_contained(jac, expected) && ideal_contained(expected, jac),
                "jac(Q[x,y,z,w]/(x^2,yz,yw)) != (xy,xz,xw,y^2)");
        c.timed(1.0, seconds_since(t0), "four-variable ring");
    }
    {
        auto t0 = Clock::now();
        auto R = example_ring();
        auto jac = jacobian_ideal(R);
        c.check(ideal_equal(jac, IdealHandle::maximal(R)), "jac(Q[x,y]/(x^2,xy)) != (x,y)");
        c.check(normalized_strings(jac) == std::vector<std::string>{"x", "y"}, "generators of jac are not x, y");
        c.timed(1.0, seconds_since(t0), "two-variable ring");
    }
}

// 2. Height, dimension, depth.
void dimension_goldens(Criterion& c)
{
    auto P = ring_of({"x", "y", "z", "w"}, {});
    auto I = IdealHandle::from_text(P, "(x^2, y*z, y*w)");
    c.check(height(I) == 2, "height((x^2,yz,yw)) != 2");
    c.check(krull_dimension(IdealHandle(fail_ring(), {})) == 2, "dim Q[x,y,z,w]/(x^2,yz,yw) != 2");
    auto R = example_ring();
    c.check(krull_dimension(IdealHandle(R, {})) == 1, "dim R != 1");
    c.check(depth(FinitelyPresentedModule::free(R, 1)) == 0, "depth R != 0");
}

// 3. Equidimensionality and minimal primes.
void equidimensional_goldens(Criterion& c)
{
    auto S = fail_ring();
    c.check(is_equidimensional(S) == Tristate::False, "four-variable ring reported equidimensional");
    auto I = IdealHandle(S, S.defining());
    auto primes = minimal_primes_monomial(I);
    auto supports = minimal_prime_supports(I);
    auto oracle = subset_prime_oracle(S.defining(), 4);
    std::sort(oracle.begin(), oracle.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    c.check(supports == oracle, "minimal primes disagree with the subset oracle");
    std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2, 3}};
    c.check(supports == expected, "minimal primes are not {(x,y), (x,z,w)}");
    std::vector<int> dims;
    for (const auto& p : primes)
        dims.push_back(krull_dimension(p));
    c.check(dims == std::vector<int>{2, 1}, "minimal prime dimensions are not {2, 1}");
    c.check(is_equidimensional(example_ring()) == Tristate::True, "Q[x,y]/(x^2,xy) not reported equidimensional");
}

// 4. Resolutions of R/(x, y^n).
void resolution_goldens(Criterion& c)
{
    auto R = example_ring();
    for (int n = 1; n <= 3; ++n) {
        auto t0 = Clock::now();
        auto M = FinitelyPresentedModule::cyclic(R, "(x, y^" + std::to_string(n) + ")");
        auto res = free_resolution(M, 3);
        std::string tag = "n=" + std::to_string(n) + ": ";
        c.check(res.ranks == std::vector<std::size_t>{1, 2, 3, 5}, tag + "Betti numbers are not 1,2,3,5");
        c.check(res.minimal && entries_in_maximal_ideal(res), tag + "differential entries not in m");
        c.check(composes_to_zero(res), tag + "d^2 != 0");
        c.check(exactness_certified(res), tag + "exactness not certified");
        c.timed(5.0, seconds_since(t0), "n=" + std::to_string(n));
        produced_resolutions.push_back(std::move(res));
    }
}

// 5. Ext annihilation.
void ext_goldens(Criterion& c)
{
    auto R = example_ring();
    auto y = R.parse("y");
    std::vector<std::pair<std::string, FinitelyPresentedModule>> targets{
        {"R", FinitelyPresentedModule::free(R, 1)},
        {"k", FinitelyPresentedModule::cyclic(IdealHandle::maximal(R))},
        {"R/(x)", FinitelyPresentedModule::cyclic(R, "(x)")}};
    for (int n = 1; n <= 3; ++n) {
        auto M = FinitelyPresentedModule::cyclic(R, "(x, y^" + std::to_string(n) + ")");
        for (const auto& [name, N] : targets)
            c.check(annihilates_ext(y, M, N, 2),
                    "y does not kill Ext^2(R/(x,y^" + std::to_string(n) + "), " + name + ")");
    }
    auto corpus = default_corpus(R, 42);
    for (std::size_t i : {2u, 3u}) {
        auto report = ca_witness(R.parse("x"), i, corpus);
        c.check(report.all_pass(), "x fails on some corpus pair at Ext^" + std::to_string(i));
    }
    auto k = FinitelyPresentedModule::cyclic(IdealHandle::maximal(R));
    c.check(!annihilates_ext(R.one(), k, k, 2), "1 kills Ext^2(k,k)");
    auto E = ext_module(k, k, 2);
    auto dim = ext_k_dimension(E);
    c.check(dim && *dim == 3, "dim_k Ext^2(k,k) != 3");
    auto F = free_resolution(k, 3);
    c.check(testing::ext_dimension_oracle(F, k, 2) == 3, "Hom-complex oracle disagrees on dim_k Ext^2(k,k)");
    produced_resolutions.push_back(std::move(F));
}

// 6. Stable annihilation at level 0 on the default corpus.
void stable_goldens(Criterion& c)
{
    auto R = example_ring();
    auto corpus = default_corpus(R, 42);
    for (const char* r : {"x", "y"}) {
        auto e = R.parse(r);
        for (const auto& m : corpus) {
            if (m.module.is_zero())
                continue;
            bool pass = stable_annihilation_test(e, m.module);
            c.check(pass, std::string(r) + " fails the stable annihilation test on " + m.name);
            if (!pass) {
                bool shifted = shifted_stable_annihilation_test(e, m.module, 2);
                c.notes.push_back(std::string(r) + (shifted ? " passes" : " fails") + " on Omega^2(" + m.name +
                                  "), the level matching membership in ca^3(R)");
            }
        }
    }
    auto k = FinitelyPresentedModule::cyclic(IdealHandle::maximal(R));
    c.check(!stable_annihilation_test(R.one(), k), "1 passes the stable annihilation test on k");
}

// 7. Generation time bound.
void bound_goldens(Criterion& c)
{
    auto R = example_ring();
    auto b = generation_time_bound(R, IdealHandle::maximal(R));
    c.check(b.bound == 3, "generation time bound != 3");
    c.check(b.dim_bound == 2, "dim D_sg bound != 2");
    c.check(!b.assumed_annihilates, "bound relied on an assumption");
}

// 8. Isolated singularity certificate.
void isolated_goldens(Criterion& c)
{
    auto R = example_ring();
    auto iso = is_isolated_singularity(R);
    c.check(iso.value == Tristate::True, "Q[x,y]/(x^2,xy) not certified isolated");
    c.check(iso.criterion == CriterionFlag::JacobianCriterion, "criterion flag is not jacobian-criterion");
    c.check(is_m_primary(jacobian_ideal(R)), "jac(R) not m-primary");
    auto S = fail_ring();
    auto other = is_isolated_singularity(S);
    c.check(other.value == Tristate::Unknown, "four-variable ring not reported unknown");
    bool found = false;
    for (const auto& w : other.witnesses)
        if (w.variables == std::vector<std::size_t>{0, 2, 3}) {
            found = true;
            c.check(!w.contains_jac, "jac reported inside (x,z,w)");
            c.check(!ideal_contained(jacobian_ideal(S), IdealHandle::from_text(S, "(x, z, w)")),
                    "jac inside (x,z,w) by direct containment");
        }
    c.check(found, "(x,z,w) not recorded as a singular witness");
}

// 9. Property suites.
void property_suites(Criterion& c)
{
    auto t_total = Clock::now();
    {
        // (a) Groebner membership vs. degree-bounded linear algebra.
        std::mt19937_64 rng(2024);
        const std::vector<std::string> all{"a", "b", "c", "d"};
        int disagreements = 0, members = 0, probes = 0;
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t n = 1 + trial % 4;
            testing::TestRing R(std::vector<std::string>(all.begin(), all.begin() + static_cast<long>(n)));
            auto gens = testing::random_binomial_ideal(rng, R.ring, 4);
            auto gb = buchberger(R.ring, gens);
            for (int d = 1; d <= 4; ++d) {
                auto f = testing::random_homogeneous(rng, R.ring, d, 3);
                if (trial % 2 == 0)
                    for (const auto& g : gens)
                        if (g.total_degree() <= d)
                            f += g * testing::random_homogeneous(rng, R.ring, d - g.total_degree(), 2);
                if (f.is_zero())
                    continue;
                bool nf = gb.contains(f);
                disagreements += nf != testing::membership_oracle(f, gens, f.total_degree());
                members += nf;
                ++probes;
            }
        }
        c.check(disagreements == 0, "(a) " + std::to_string(disagreements) + " membership disagreements");
        c.check(members > 0 && members < probes, "(a) probes did not mix members and non-members");
        c.notes.push_back("(a) " + std::to_string(probes) + " probes on 200 ideals");
    }
    {
        // (b) depth via Koszul cohomology + pd over the ambient ring = n.
        int checked = 0;
        auto check_ab = [&](const FinitelyPresentedModule& M, const std::string& name) {
            int pd = projective_dimension_over_P(M);
            c.check(koszul_depth(M) + pd == static_cast<int>(M.ring().nvars()),
                    "(b) Auslander-Buchsbaum fails on " + name);
            ++checked;
        };
        for (const auto& m : default_corpus(example_ring(), 42))
            check_ab(m.module, m.name);
        auto S = fail_ring();
        for (const auto& m : default_corpus(S, 42))
            check_ab(m.module, m.name + " over the four-variable ring");
        c.notes.push_back("(b) " + std::to_string(checked) + " corpus modules");
    }
    {
        // (c) Koszul: regular sequences have vanishing cohomology below the
        // top, and every r in (f) kills every H^i.
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> power(1, 3);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 2 + trial % 2;
            RingPresentation P(Field::rationals(), default_names(n), {});
            std::size_t l = 1 + trial % n;
            std::vector<Polynomial> f;
            for (std::size_t i = 0; i < l; ++i)
                f.push_back(P.variable(i).pow(static_cast<unsigned>(power(rng))));
            auto free = FinitelyPresentedModule::free(P, 1);
            for (std::size_t i = 0; i < l; ++i)
                c.check(koszul_cohomology(f, free, i).is_zero(),
                        "(c) trial " + std::to_string(trial) + ": H^" + std::to_string(i) + " != 0");
            auto M = FinitelyPresentedModule::cyclic(IdealHandle(P, testing::random_binomial_ideal(rng, P.ring(), 2)));
            Polynomial r = f[trial % l] * testing::random_polynomial(rng, P.ring(), 2, 2);
            for (std::size_t i = 0; i <= l; ++i)
                c.check(annihilates(r, koszul_subquotient(f, M, i)),
                        "(c) trial " + std::to_string(trial) + ": r does not kill H^" + std::to_string(i));
        }
        c.notes.push_back("(c) 50 Koszul instances");
    }
    {
        // (d) every resolution produced by the suite, plus random quotients.
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 2 + trial % 2;
            RingPresentation P(Field::rationals(), default_names(n), {});
            auto M = FinitelyPresentedModule::cyclic(IdealHandle(P, testing::random_binomial_ideal(rng, P.ring(), 3)));
            produced_resolutions.push_back(free_resolution(M, n + 1));
        }
        for (const auto& m : default_corpus(example_ring(), 42))
            produced_resolutions.push_back(free_resolution(m.module, 3));
        std::size_t index = 0;
        for (const auto& res : produced_resolutions) {
            c.check(composes_to_zero(res), "(d) resolution " + std::to_string(index) + ": d^2 != 0");
            c.check(exactness_certified(res), "(d) resolution " + std::to_string(index) + ": not exact");
            ++index;
        }
        c.notes.push_back("(d) " + std::to_string(index) + " resolutions");
    }
    c.timed(60.0, seconds_since(t_total), "property suites");
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--expect-fail N ...]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> suite{
        {"Jacobian ideal goldens", jacobian_goldens},
        {"height, dimension and depth goldens", dimension_goldens},
        {"equidimensionality and minimal primes", equidimensional_goldens},
        {"minimal resolutions of R/(x, y^n)", resolution_goldens},
        {"Ext annihilation", ext_goldens},
        {"stable annihilation by x and y on the default corpus", stable_goldens},
        {"generation time bound", bound_goldens},
        {"isolated singularity certificate", isolated_goldens},
        {"property suites", property_suites},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        Criterion c{static_cast<int>(i + 1), suite[i].first};
        auto t0 = Clock::now();
        try {
            suite[i].second(c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        std::printf("%s [%d] %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds_since(t0));
        for (const auto& f : c.failures)
            std::printf("       failed: %s\n", f.c_str());
        for (const auto& n : c.notes)
            std::printf("       note: %s\n", n.c_str());
        if (!c.ok)
            failed.insert(c.id);
    }
    std::printf("%zu/%zu criteria pass\n", suite.size() - failed.size(), suite.size());
    if (!expected_failures.empty()) {
        std::string list;
        for (int id : expected_failures)
            list += (list.empty() ? "" : ", ") + std::to_string(id);
        std::printf("expected failures: %s (%s)\n", list.c_str(), failed == expected_failures ? "matched" : "MISMATCH");
    }
    std::fflush(stdout);
    return failed == expected_failures ? 0 : 1;
}
