#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "singulant/homalg.hpp"

using namespace singulant;

namespace {

RingPresentation ring_of(std::vector<std::string> names, std::vector<std::string> defining)
{
    return RingPresentation::from_text(Field::rationals(), std::move(names), defining);
}

RingPresentation example_ring()
{
    return ring_of({"x", "y"}, {"x^2", "x*y"});
}

std::vector<Polynomial> seq(const RingPresentation& R, std::string_view text)
{
    return IdealHandle::from_text(R, text).generators();
}

}  // namespace

TEST_CASE("Koszul cohomology examples")
{
    auto P = ring_of({"x", "y"}, {});
    auto Pm = FinitelyPresentedModule::free(P, 1);
    auto f = seq(P, "(x, y)");
    CHECK(koszul_cohomology(f, Pm, 0).is_zero());
    CHECK(koszul_cohomology(f, Pm, 1).is_zero());
    auto H2 = koszul_cohomology(f, Pm, 2);
    CHECK(k_dimension(H2) == std::optional<std::size_t>(1));
    CHECK(ideal_equal(annihilator(H2), IdealHandle::maximal(P)));

    auto R = example_ring();
    auto Rm = FinitelyPresentedModule::free(R, 1);
    auto x = seq(R, "(x)");
    // H^0 = ann(x) = m, H^1 = R/(x).
    auto H0 = koszul_cohomology(x, Rm, 0);
    CHECK(H0.generator_count() == 2);
    auto cycles = koszul_subquotient(x, Rm, 0).cycles;
    std::vector<Polynomial> H0gens;
    for (const auto& z : cycles)
        H0gens.push_back(z[0]);
    CHECK(ideal_equal(IdealHandle(R, H0gens), IdealHandle::maximal(R)));
    // As a module H^0 = m, whose annihilator is the socle (x).
    CHECK(ideal_equal(annihilator(H0), IdealHandle::from_text(R, "(x)")));
    auto H1 = koszul_cohomology(x, Rm, 1);
    CHECK(ideal_equal(annihilator(H1), IdealHandle::from_text(R, "(x)")));
    CHECK_FALSE(k_dimension(H1).has_value());

    auto zero = FinitelyPresentedModule::cyclic(R, "(1)");
    for (std::size_t i = 0; i <= 1; ++i)
        CHECK(koszul_cohomology(x, zero, i).is_zero());

    // d^{i+1} d^i = 0.
    auto g = seq(P, "(x^2, x*y, y^3)");
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        auto prod = koszul_differential(g, i + 1, 2) * koszul_differential(g, i, 2);
        CHECK(prod.is_zero());
    }
}

TEST_CASE("Koszul support check examples")
{
    auto R = example_ring();
    CHECK(koszul_support_check(seq(R, "(x)"), FinitelyPresentedModule::free(R, 1)));
    auto k = FinitelyPresentedModule::cyclic(R, "(x, y)");
    CHECK(koszul_support_check(seq(R, "(x)"), k));
    auto P = ring_of({"x", "y"}, {});
    CHECK(koszul_support_check(seq(P, "(x, y)"), FinitelyPresentedModule::free(P, 1)));
}

TEST_CASE("Ext examples")
{
    auto R = example_ring();
    auto k = FinitelyPresentedModule::cyclic(R, "(x, y)");
    auto Rf = FinitelyPresentedModule::free(R, 1);

    auto E = ext_module(k, k, 2);
    CHECK(ext_k_dimension(E) == std::optional<std::size_t>(3));
    CHECK_FALSE(annihilates_ext(R.one(), k, k, 2));
    CHECK(E.module.boundaries_in_cycles({}));

    // Ext^0(R, N) = N, Ext^i(R, N) = 0 for i > 0.
    auto N = FinitelyPresentedModule::cyclic(R, "(x, y^2)");
    CHECK(k_dimension(ext_module(Rf, N, 0).module.present()) == std::optional<std::size_t>(2));
    for (std::size_t i = 1; i <= 2; ++i)
        CHECK(ext_module(Rf, N, i).module.is_zero());

    for (int n = 1; n <= 3; ++n) {
        auto M = FinitelyPresentedModule::cyclic(R, "(x, y^" + std::to_string(n) + ")");
        for (const auto& target : {Rf, k, FinitelyPresentedModule::cyclic(R, "(x)")})
            CHECK(annihilates_ext(R.parse("y"), M, target, 2));
    }
}

TEST_CASE("Ext dimensions agree with the Hom-complex linear-algebra oracle")
{
    auto R = example_ring();
    std::vector<FinitelyPresentedModule> sources = {
        FinitelyPresentedModule::cyclic(R, "(x, y)"), FinitelyPresentedModule::cyclic(R, "(x, y^2)"),
        FinitelyPresentedModule::cyclic(R, "(x)"), FinitelyPresentedModule::cyclic(R, "(y)")};
    std::vector<FinitelyPresentedModule> targets = {FinitelyPresentedModule::cyclic(R, "(x, y)"),
                                                    FinitelyPresentedModule::cyclic(R, "(x, y^3)"),
                                                    FinitelyPresentedModule::cyclic(R, "(x^2, x*y, y^2)")};
    for (const auto& M : sources) {
        auto F = free_resolution(M, 4);
        for (const auto& N : targets)
            for (std::size_t i = 0; i <= 3; ++i) {
                auto E = ext_module(F, N, i);
                auto dim = ext_k_dimension(E);
                REQUIRE(dim.has_value());
                CHECK(*dim == singulant::testing::ext_dimension_oracle(F, N, i));
            }
    }
    // Ext^i(k, k) = k^{beta_i} because the resolution is minimal.
    auto k = sources[0];
    auto F = free_resolution(k, 4);
    for (std::size_t i = 0; i <= 3; ++i)
        CHECK(ext_k_dimension(ext_module(F, k, i)) == std::optional<std::size_t>(F.ranks[i]));
}

TEST_CASE("stable annihilation examples")
{
    auto R = example_ring();
    auto k = FinitelyPresentedModule::cyclic(R, "(x, y)");
    CHECK(stable_annihilation_test(R.parse("x"), k));
    CHECK(stable_annihilation_test(R.parse("y"), k));
    CHECK_FALSE(stable_annihilation_test(R.one(), k));
    auto A = ring_of({"x"}, {"x^2"});
    CHECK_FALSE(stable_annihilation_test(A.one(), FinitelyPresentedModule::cyclic(A, "(x)")));
    CHECK(stable_annihilation_test(A.one(), FinitelyPresentedModule::free(A, 2)));
    CHECK_THROWS_AS(stable_annihilation_test(R.one(), FinitelyPresentedModule::cyclic(R, "(1)")),
                    PreconditionError);

    // m^2 = (y^2) in R, Omega^1(R/m^2) = R/(x) and Ext^1(R/(y^2), R/(x)) =
    // k[y]/(y^2), which y does not kill. y is in ca^3 but not ca^1, so the
    // test only passes after shifting to Omega^2.
    auto Rm2 = FinitelyPresentedModule::cyclic(R, "(x^2, x*y, y^2)");
    CHECK_FALSE(stable_annihilation_test(R.parse("y"), Rm2));
    CHECK(stable_annihilation_test(R.parse("x"), Rm2));
    CHECK(shifted_stable_annihilation_test(R.parse("y"), Rm2, 2));
    CHECK(shifted_stable_annihilation_test(R.one(), FinitelyPresentedModule::free(R, 1), 0));
    CHECK_FALSE(shifted_stable_annihilation_test(R.one(), k, 2));
}

TEST_CASE("default corpus and ca witness")
{
    auto R = example_ring();
    auto corpus = default_corpus(R, 42);
    REQUIRE(corpus.size() == 7);
    CHECK(corpus[0].name == "k");
    CHECK(corpus[5].name == "Omega^1(k)");
    auto again = default_corpus(R, 42);
    CHECK(corpus.back().module.presentation() == again.back().module.presentation());

    auto y = ca_witness(R.parse("y"), 3, corpus);
    CHECK(y.all_pass());
    auto x = ca_witness(R.parse("x"), 3, corpus);
    CHECK(x.all_pass());
    auto one = ca_witness(R.one(), 1, corpus);
    CHECK(one.excluded());
    auto serial = ca_witness_serial(R.one(), 1, corpus);
    CHECK(serial.outcomes == one.outcomes);
}

TEST_CASE("property: Koszul vanishing and self-annihilation")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> power(1, 3);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 2 + trial % 2;
        RingPresentation P(Field::rationals(), default_names(n), {});
        // Powers of distinct variables form a regular sequence.
        std::size_t l = 1 + trial % n;
        std::vector<Polynomial> f;
        for (std::size_t i = 0; i < l; ++i)
            f.push_back(P.variable(i).pow(static_cast<unsigned>(power(rng))));
        auto Pm = FinitelyPresentedModule::free(P, 1);
        for (std::size_t i = 0; i < l; ++i)
            CHECK(koszul_cohomology(f, Pm, i).is_zero());
        auto top = koszul_cohomology(f, Pm, l);
        CHECK(ideal_equal(annihilator(top), IdealHandle(P, f)));

        auto gens = singulant::testing::random_binomial_ideal(rng, P.ring(), 2);
        auto M = FinitelyPresentedModule::cyclic(IdealHandle(P, gens));
        Polynomial r = f[0] * singulant::testing::random_polynomial(rng, P.ring(), 2, 2);
        for (std::size_t i = 0; i <= l; ++i)
            CHECK(annihilates(r, koszul_subquotient(f, M, i)));
    }
}

TEST_CASE("property: Koszul depth matches Auslander-Buchsbaum")
{
    auto R = example_ring();
    for (const auto& c : default_corpus(R, 42))
        CHECK(koszul_depth(c.module) == depth(c.module));
    auto P = ring_of({"x", "y", "z"}, {});
    for (const char* gens : {"(x^2)", "(x*y, x*z)", "(x, y)", "(x^2, y^2, z^2)", "(x*y - z^2)"}) {
        auto M = FinitelyPresentedModule::cyclic(P, gens);
        CHECK(koszul_depth(M) == depth(M));
    }
}
