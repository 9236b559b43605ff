#include "singulant/jacobian.hpp"

#include <omp.h>

#include "singulant/error.hpp"

namespace singulant {

PolyMatrix jacobian_matrix(const RingPresentation& R)
{
    const auto& f = R.defining();
    PolyMatrix J(R.ring(), f.size(), R.nvars());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < R.nvars(); ++j)
            J(i, j) = f[i].partial_derivative(j);
    return J;
}

namespace {

Polynomial bareiss(PolyMatrix a)
{
    std::size_t n = a.rows();
    Polynomial prev = Polynomial::constant(a.ring(), Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero())
                ++p;
            if (p == n)
                return Polynomial(a.ring());
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = Polynomial(a.ring());
        }
        prev = a(k, k);
    }
    Polynomial d = a(n - 1, n - 1);
    return negate ? -d : d;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i)
        c[i] = i;
    if (k > n)
        return out;
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

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    PolyMatrix s(m.ring(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s(i, j) = m(rows[i], cols[j]);
    return s;
}

}  // namespace

Polynomial determinant(const PolyMatrix& a)
{
    if (a.rows() != a.cols())
        throw StructuralError("determinant of a non-square matrix");
    switch (a.rows()) {
    case 0:
        return Polynomial::constant(a.ring(), Scalar(1));
    case 1:
        return a(0, 0);
    case 2:
        return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default:
        return bareiss(a);
    }
}

std::vector<Polynomial> minors_serial(const PolyMatrix& m, std::size_t k)
{
    std::vector<Polynomial> out;
    auto cols = combinations(m.cols(), k);
    for (const auto& r : combinations(m.rows(), k))
        for (const auto& c : cols)
            out.push_back(determinant(submatrix(m, r, c)));
    return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k)
{
    auto rows = combinations(m.rows(), k);
    auto cols = combinations(m.cols(), k);
    std::vector<Polynomial> out(rows.size() * cols.size());
    auto total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
        auto i = static_cast<std::size_t>(idx) / cols.size();
        auto j = static_cast<std::size_t>(idx) % cols.size();
        out[idx] = determinant(submatrix(m, rows[i], cols[j]));
    }
    return out;
}

JacobianData jacobian_data(const RingPresentation& R)
{
    JacobianData data;
    data.matrix = jacobian_matrix(R);
    IdealHandle zero(R, {});
    if (zero.is_unit())
        throw PreconditionError("the defining ideal is the unit ideal");
    data.h = height(zero);
    auto h = static_cast<std::size_t>(data.h);
    if (h == 0) {
        data.minors = {R.one()};
    } else if (h > std::min(data.matrix.rows(), data.matrix.cols())) {
        data.warnings.push_back("height exceeds the Jacobian matrix size; jac is the zero ideal");
    } else {
        data.minors = minors(data.matrix, h);
    }
    std::vector<Polynomial> gens;
    for (const auto& p : data.minors) {
        auto r = R.reduce(p);
        if (!r.is_zero())
            gens.push_back(std::move(r));
    }
    data.jac_ideal = IdealHandle(R, std::move(gens));
    return data;
}

IdealHandle jacobian_ideal(const RingPresentation& R)
{
    return jacobian_data(R).jac_ideal;
}

std::string to_string(CriterionFlag f)
{
    return f == CriterionFlag::JacobianCriterion ? "jacobian-criterion" : "unknown";
}

SingularLocusCertificate singular_locus_certificate(const RingPresentation& R)
{
    SingularLocusCertificate cert;
    cert.ideal = jacobian_ideal(R);
    // Q and F_p are perfect, so only equidimensionality is left to check.
    if (is_equidimensional(R) == Tristate::True)
        cert.valid = CriterionFlag::JacobianCriterion;
    return cert;
}

std::vector<SingularWitness> singular_witnesses(const RingPresentation& R)
{
    std::vector<SingularWitness> out;
    IdealHandle zero(R, {});
    const auto& gb = zero.gb();
    if (gb.is_unit_ideal() || R.nvars() > 20)
        return out;
    for (const auto& g : gb.elements())
        if (!g.is_monomial())
            return out;
    std::size_t n = R.nvars();
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    IdealHandle jac;
    bool have_jac = false;
    for (std::uint64_t S = 1; S < full; ++S) {
        // Localizing at p_S inverts the variables outside S; the defining
        // ideal becomes the monomial ideal of the S-parts of its generators.
        std::vector<Monomial> local;
        bool contains = true;
        for (const auto& g : gb.elements()) {
            std::vector<int> e(g.leading_monomial().exponents().begin(), g.leading_monomial().exponents().end());
            for (std::size_t v = 0; v < n; ++v)
                if (!(S & (std::uint64_t{1} << v)))
                    e[v] = 0;
            Monomial m(std::move(e));
            if (m.is_one()) {
                contains = false;
                break;
            }
            local.push_back(std::move(m));
        }
        if (!contains)
            continue;
        // Regular iff the minimal generators of the localized ideal are
        // variables.
        bool regular = true;
        for (const auto& m : local) {
            bool minimal = true;
            for (const auto& o : local)
                if (!(o == m) && o.divides(m))
                    minimal = false;
            if (minimal && m.degree() > 1)
                regular = false;
        }
        if (regular)
            continue;
        if (!have_jac) {
            jac = jacobian_ideal(R);
            have_jac = true;
        }
        SingularWitness w;
        std::vector<Polynomial> pgens;
        for (std::size_t v = 0; v < n; ++v)
            if (S & (std::uint64_t{1} << v)) {
                w.variables.push_back(v);
                pgens.push_back(R.variable(v));
            }
        w.contains_jac = ideal_contained(jac, IdealHandle(R, std::move(pgens)));
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const SingularWitness& a, const SingularWitness& b) {
        if (a.variables.size() != b.variables.size())
            return a.variables.size() < b.variables.size();
        return a.variables < b.variables;
    });
    return out;
}

IsolatedResult is_isolated_singularity(const RingPresentation& R)
{
    IsolatedResult res;
    auto cert = singular_locus_certificate(R);
    res.criterion = cert.valid;
    if (cert.ideal.is_unit()) {
        res.regular = true;
        res.value = Tristate::False;
        return res;
    }
    if (cert.valid == CriterionFlag::JacobianCriterion) {
        res.value = is_m_primary(cert.ideal) ? Tristate::True : Tristate::False;
        return res;
    }
    res.witnesses = singular_witnesses(R);
    return res;
}

}  // namespace singulant
