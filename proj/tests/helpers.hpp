#pragma once

#include <random>
#include <string>
#include <vector>

#include "singulant/parse.hpp"
#include "singulant/polynomial.hpp"

namespace singulant::testing {

struct TestRing {
    RingPtr ring;
    std::vector<std::string> names;

    TestRing(std::vector<std::string> vars, Field field = Field::rationals(),
             MonomialOrder order = MonomialOrder::grevlex())
        : ring(make_ring(field, vars.size(), std::move(order))), names(std::move(vars))
    {
    }

    Polynomial operator()(const std::string& text) const { return parse_polynomial(text, ring, names); }
    std::vector<Polynomial> list(const std::string& text) const { return parse_polynomial_list(text, ring, names); }
    std::string str(const Polynomial& p) const { return p.to_string(names); }
};

/// Random polynomial with up to `terms` terms, exponents below max_exp and
/// integer coefficients in [-3, 3].
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int terms, int max_exp)
{
    std::uniform_int_distribution<int> exp(0, max_exp - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(ring->nvars());
        for (auto& x : e)
            x = exp(rng);
        ts.push_back({Monomial(std::move(e)), Scalar(coeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int max_exp)
{
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<int> e(nvars);
    for (auto& x : e)
        x = exp(rng);
    return Monomial(std::move(e));
}

}  // namespace singulant::testing

namespace singulant::testing {

inline Monomial random_monomial_of_degree(std::mt19937_64& rng, std::size_t nvars, int degree)
{
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    std::vector<int> e(nvars, 0);
    for (int k = 0; k < degree; ++k)
        ++e[var(rng)];
    return Monomial(std::move(e));
}

/// Homogeneous monomial / binomial ideal in `nvars` variables, generator
/// degrees in [1, max_degree].
inline std::vector<Polynomial> random_binomial_ideal(std::mt19937_64& rng, const RingPtr& ring, int max_degree)
{
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> degree(1, max_degree);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> coeff(1, 3);
    std::vector<Polynomial> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int d = degree(rng);
        auto a = random_monomial_of_degree(rng, ring->nvars(), d);
        Polynomial g = Polynomial::term(ring, a, Scalar(1));
        if (kind(rng) == 1) {
            auto b = random_monomial_of_degree(rng, ring->nvars(), d);
            g -= Polynomial::term(ring, b, Scalar(coeff(rng)));
        }
        if (!g.is_zero())
            gens.push_back(g);
    }
    if (gens.empty())
        gens.push_back(Polynomial::variable(ring, 0));
    return gens;
}

/// Random homogeneous polynomial of degree d with a few terms.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, int d, int terms)
{
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t)
        ts.push_back({random_monomial_of_degree(rng, ring->nvars(), d), Scalar(coeff(rng))});
    return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace singulant::testing
