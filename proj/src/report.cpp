#include "singulant/report.hpp"

#include <functional>
#include <set>

namespace singulant {

namespace {

std::string ideal_string(const RingPresentation& R, const std::vector<std::size_t>& vars)
{
    std::string s = "(";
    for (std::size_t i = 0; i < vars.size(); ++i)
        s += (i ? ", " : "") + R.names()[vars[i]];
    return s + ")";
}

std::vector<std::string> gen_strings(const IdealHandle& I)
{
    return normalized_strings(I);
}

}  // namespace

AnnihilatorBounds annihilator_bounds(const RingPresentation& R, const std::vector<Polynomial>& extra,
                                     std::uint64_t seed, std::size_t max_shift)
{
    AnnihilatorBounds out;
    auto jac = jacobian_ideal(R);
    if (jac.is_unit()) {
        // A regular ring has ann_R D_sg(R) = R.
        out.regular = true;
        out.lower_gens = {R.one()};
        out.lower = IdealHandle::unit(R);
        out.certificates.push_back({"1", "regular-ring", {}, {}});
        return out;
    }
    std::vector<Polynomial> candidates;
    std::set<std::string> seen;
    auto add = [&](const Polynomial& p) {
        auto r = R.reduce(p);
        if (r.is_zero())
            return;
        r = r.monic();
        if (seen.insert(R.str(r)).second)
            candidates.push_back(std::move(r));
    };
    for (const auto& g : socle(R).reduced_generators())
        add(g);
    for (const auto& g : jac.reduced_generators())
        add(g);
    for (std::size_t i = 0; i < R.nvars(); ++i)
        add(R.variable(i));
    for (const auto& g : extra)
        add(g);

    std::vector<CorpusModule> corpus;
    for (auto& c : default_corpus(R, seed))
        if (!c.module.is_zero())
            corpus.push_back(std::move(c));

    for (const auto& r : candidates) {
        std::string name = R.str(r);
        bool failed = false, undecided = false;
        AnnCertificate cert{name, "stable-annihilation", {}, {}};
        for (const auto& c : corpus) {
            try {
                std::optional<std::size_t> passed;
                for (std::size_t j = 0; j <= max_shift && !passed; ++j)
                    if (shifted_stable_annihilation_test(r, c.module, j))
                        passed = j;
                if (passed) {
                    cert.modules.push_back(c.name);
                    cert.shifts.push_back(*passed);
                    continue;
                }
                // Ext^1(Omega^J M, Omega^{J+1} M) = Ext^{J+1}(M, Omega^{J+1} M).
                std::string level = std::to_string(max_shift + 1);
                out.exclusions.push_back({name, c.name, "Omega^" + level + "(" + c.name + ")", max_shift + 1,
                                          name + " is not in ca^" + level + "(R)"});
                failed = true;
            } catch (const std::exception& e) {
                out.undecided.push_back(name + " on " + c.name + ": " + e.what());
                undecided = true;
            }
            break;
        }
        if (!failed && !undecided) {
            out.lower_gens.push_back(r);
            out.certificates.push_back(std::move(cert));
        }
    }
    out.lower = IdealHandle(R, out.lower_gens);
    return out;
}

BoundData generation_time_bound(const RingPresentation& R, const IdealHandle& I, const AnnihilatorBounds* bounds,
                                bool assume_annihilates, std::uint64_t seed)
{
    if (!is_m_primary(I))
        throw PreconditionError("I is not m-primary");
    if (!assume_annihilates) {
        std::optional<AnnihilatorBounds> computed;
        if (!bounds) {
            computed = annihilator_bounds(R, {}, seed);
            bounds = &*computed;
        }
        if (!ideal_contained(I, bounds->lower))
            throw PreconditionError("I is not certified inside the annihilator lower bound");
    }
    BoundData b;
    b.ideal = I;
    b.assumed_annihilates = assume_annihilates;
    b.nu = minimal_generators(I);
    b.loewy = loewy_length(I);
    b.depth = depth(FinitelyPresentedModule::free(R, 1));
    b.bound = (b.nu - b.depth + 1) * b.loewy;
    b.dim_bound = b.bound - 1;
    return b;
}

std::string to_string(RadicalRelation r)
{
    switch (r) {
    case RadicalRelation::Equal:
        return "equal";
    case RadicalRelation::LowerStrictlySmaller:
        return "lower-strictly-smaller";
    case RadicalRelation::JacStrictlySmaller:
        return "jac-strictly-smaller";
    case RadicalRelation::Incomparable:
        return "incomparable";
    }
    return "incomparable";
}

RadicalComparison radical_comparison_report(const RingPresentation& R, const AnnihilatorBounds& bounds)
{
    RadicalComparison out;
    auto jac = jacobian_ideal(R);
    for (const auto& g : jac.reduced_generators())
        if (!radical_membership(g, bounds.lower))
            out.jac_outside_lower.push_back(R.str(g));
    for (const auto& g : bounds.lower.reduced_generators())
        if (!radical_membership(g, jac))
            out.lower_outside_jac.push_back(R.str(g));
    bool jl = out.jac_outside_lower.empty(), lj = out.lower_outside_jac.empty();
    out.relation = jl && lj ? RadicalRelation::Equal
                   : jl     ? RadicalRelation::JacStrictlySmaller
                   : lj     ? RadicalRelation::LowerStrictlySmaller
                            : RadicalRelation::Incomparable;
    if (is_equidimensional(R) != Tristate::True) {
        for (const auto& w : singular_witnesses(R))
            if (!w.contains_jac)
                out.witness_primes.push_back(ideal_string(R, w.variables));
        out.failure_pattern = !out.jac_outside_lower.empty();
    }
    return out;
}

SingularityReport singularity_report(const RingPresentation& R, const ReportOptions& options)
{
    SingularityReport rep;
    rep.ring = R;
    IdealHandle zero(R, {});
    if (zero.is_unit())
        throw PreconditionError("the defining ideal is the unit ideal");
    rep.dim = krull_dimension(zero);
    rep.depth = depth(FinitelyPresentedModule::free(R, 1));
    rep.depth_graded = R.graded();
    rep.jac = jacobian_data(R);
    rep.equidimensional = is_equidimensional(R);
    rep.locus = singular_locus_certificate(R);
    rep.isolated = is_isolated_singularity(R);
    rep.socle = socle(R);
    rep.bounds = annihilator_bounds(R, options.extra_elements, options.seed);
    rep.radical = radical_comparison_report(R, rep.bounds);

    rep.hypotheses.push_back("strong generator: dim D^f(R) < infinity is assumed for affine algebras over Q and "
                             "F_p, not checked");
    rep.hypotheses.push_back("annihilator lower bound: stable-annihilation certificates cover the default corpus "
                             "(seed " + std::to_string(options.seed) +
                             ") only; they are corpus evidence, not a proof over all modules");
    rep.hypotheses.push_back("field " + R.field().name() + " is perfect");
    if (!rep.depth_graded)
        rep.hypotheses.push_back("depth: local reading unverified (non-homogeneous presentation)");
    if (!R.field().is_rational())
        rep.hypotheses.push_back("characteristic " + std::to_string(R.field().characteristic()) +
                                 ": partial derivatives of p-th powers vanish");
    if (options.assume_annihilates)
        rep.hypotheses.push_back("assume-annihilates: I is taken to annihilate D_sg(R) without certificate");

    if (rep.isolated.value == Tristate::True) {
        IdealHandle I = options.ideal ? *options.ideal : rep.bounds.lower;
        try {
            rep.bound = generation_time_bound(R, I, &rep.bounds, options.assume_annihilates, options.seed);
        } catch (const PreconditionError& e) {
            rep.hypotheses.push_back(std::string("bound omitted: ") + e.what());
        }
    } else {
        rep.hypotheses.push_back("bound omitted: R is not certified to have an isolated singularity");
    }
    return rep;
}

nlohmann::ordered_json to_json(const SingularityReport& rep)
{
    using json = nlohmann::ordered_json;
    const auto& R = rep.ring;
    json j;
    j["ring"] = R.to_string();
    j["field"] = R.field().name();
    j["dim"] = rep.dim;
    j["depth"] = rep.depth;
    j["depth_local_reading_verified"] = rep.depth_graded;
    j["jac"] = {{"gens", gen_strings(rep.jac.jac_ideal)},
                {"h", rep.jac.h},
                {"criterion", to_string(rep.locus.valid)},
                {"warnings", rep.jac.warnings}};
    j["equidimensional"] = to_string(rep.equidimensional);
    json witnesses = json::array();
    for (const auto& w : rep.isolated.witnesses)
        witnesses.push_back({{"prime", ideal_string(R, w.variables)}, {"contains_jac", w.contains_jac}});
    j["isolated"] = {{"value", to_string(rep.isolated.value)},
                     {"regular", rep.isolated.regular},
                     {"witnesses", witnesses}};
    j["socle"] = {{"gens", gen_strings(rep.socle)}};
    json certs = json::array();
    for (const auto& c : rep.bounds.certificates)
        certs.push_back(
            {{"element", c.element}, {"method", c.method}, {"modules", c.modules}, {"syzygy_shifts", c.shifts}});
    json excl = json::array();
    for (const auto& e : rep.bounds.exclusions)
        excl.push_back({{"element", e.element},
                        {"M", e.module_m},
                        {"N", e.module_n},
                        {"degree", e.degree},
                        {"claim", e.claim}});
    std::vector<std::string> lower;
    for (const auto& g : rep.bounds.lower_gens)
        lower.push_back(R.str(g));
    j["ann_bounds"] = {{"lower_gens", lower},
                       {"certificates", certs},
                       {"exclusions", excl},
                       {"undecided", rep.bounds.undecided},
                       {"regular", rep.bounds.regular},
                       {"corpus_evidence", !rep.bounds.regular}};
    if (rep.radical)
        j["radical_comparison"] = {{"relation", to_string(rep.radical->relation)},
                                   {"jac_outside_lower", rep.radical->jac_outside_lower},
                                   {"lower_outside_jac", rep.radical->lower_outside_jac},
                                   {"witness_primes", rep.radical->witness_primes},
                                   {"failure_pattern", rep.radical->failure_pattern}};
    if (rep.bound)
        j["bound"] = {{"I_gens", gen_strings(rep.bound->ideal)},
                      {"nu", rep.bound->nu},
                      {"loewy", rep.bound->loewy},
                      {"depth", rep.bound->depth},
                      {"generation_time", rep.bound->bound},
                      {"dim_sg_bound", rep.bound->dim_bound},
                      {"assumed_annihilates", rep.bound->assumed_annihilates}};
    else
        j["bound"] = nullptr;
    j["hypotheses"] = rep.hypotheses;
    return j;
}

// ---------------------------------------------------------------------------

std::string to_string(LedgerStatus s)
{
    switch (s) {
    case LedgerStatus::Pass:
        return "pass";
    case LedgerStatus::Fail:
        return "fail";
    case LedgerStatus::Skipped:
        return "skipped";
    }
    return "fail";
}

namespace {

// Some defining generator has a term whose exponent in a present variable is
// divisible by the characteristic, so its derivative loses that term.
bool derivative_degenerates(const RingPresentation& R)
{
    auto p = R.field().characteristic();
    if (p == 0)
        return false;
    for (const auto& f : R.defining())
        for (const auto& t : f.terms())
            for (std::size_t v = 0; v < R.nvars(); ++v)
                if (t.mono[v] > 0 && t.mono[v] % static_cast<int>(p) == 0)
                    return true;
    return false;
}

}  // namespace

std::vector<LedgerEntry> verify_paper_examples(const PaperCheckOptions& options)
{
    const Field& F = options.field;
    auto R = RingPresentation::from_text(F, {"x", "y"}, {"x^2", "x*y"});
    auto S = RingPresentation::from_text(F, {"x", "y", "z", "w"}, {"x^2", "y*z", "y*w"});
    std::vector<LedgerEntry> ledger;

    auto run = [&](std::string id, std::string claim, const RingPresentation* char_sensitive,
                   const std::function<std::string()>& check) {
        LedgerEntry e{std::move(id), std::move(claim), LedgerStatus::Fail, ""};
        if (char_sensitive && derivative_degenerates(*char_sensitive)) {
            e.status = LedgerStatus::Skipped;
            e.detail = "a partial derivative degenerates in characteristic " + std::to_string(F.characteristic());
        } else {
            try {
                e.detail = check();
                e.status = e.detail.empty() ? LedgerStatus::Pass : LedgerStatus::Fail;
            } catch (const std::exception& ex) {
                e.detail = std::string("exception: ") + ex.what();
            }
        }
        ledger.push_back(std::move(e));
    };
    auto jac_of = [&](const RingPresentation& T) {
        auto data = jacobian_data(T);
        if (!options.corrupt_jacobian)
            return data.jac_ideal;
        std::vector<Polynomial> squared;
        for (const auto& g : data.jac_ideal.generators())
            squared.push_back(g * g);
        return IdealHandle(T, squared);
    };
    auto fail_unless = [](bool ok, const std::string& what) { return ok ? std::string() : what; };
    auto k = FinitelyPresentedModule::cyclic(IdealHandle::maximal(R));

    run("jac-fail", "jac(Q[x,y,z,w]/(x^2,yz,yw)) = (xy, xz, xw, y^2)", &S, [&] {
        return fail_unless(ideal_equal(jac_of(S), IdealHandle::from_text(S, "(x*y, x*z, x*w, y^2)")),
                           "jac differs");
    });
    run("jac-example", "jac(Q[x,y]/(x^2,xy)) = (x, y)", &R, [&] {
        return fail_unless(ideal_equal(jac_of(R), IdealHandle::maximal(R)), "jac differs");
    });
    run("height-fail", "height(x^2, yz, yw) = 2 and dim = 2", nullptr, [&] {
        IdealHandle I(S, {});
        return fail_unless(height(I) == 2 && krull_dimension(I) == 2, "height/dim differ");
    });
    run("dim-depth-example", "0 = depth(R) < dim(R) = 1", nullptr, [&] {
        return fail_unless(krull_dimension(IdealHandle(R, {})) == 1 && depth(FinitelyPresentedModule::free(R, 1)) == 0,
                           "dim/depth differ");
    });
    run("equidim-fail", "Q[x,y,z,w]/(x^2,yz,yw) is not equidimensional: primes (x,y), (x,z,w)", nullptr, [&] {
        auto primes = minimal_prime_supports(IdealHandle(S, {}));
        bool ok = is_equidimensional(S) == Tristate::False &&
                  primes == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2, 3}};
        return fail_unless(ok, "equidimensionality or minimal primes differ");
    });
    run("equidim-example", "Q[x,y]/(x^2,xy) is equidimensional", nullptr,
        [&] { return fail_unless(is_equidimensional(R) == Tristate::True, "not equidimensional"); });
    run("resolution-example", "minimal resolution of R/(x,y^n) has ranks 1,2,3,5 (n = 1,2,3)", nullptr, [&] {
        for (int n = 1; n <= 3; ++n) {
            auto res = free_resolution(FinitelyPresentedModule::cyclic(R, "(x, y^" + std::to_string(n) + ")"), 3);
            if (res.ranks != std::vector<std::size_t>{1, 2, 3, 5} || !res.minimal || !composes_to_zero(res) ||
                !exactness_certified(res))
                return "n = " + std::to_string(n) + " differs";
        }
        return std::string();
    });
    run("ext-y-example", "y Ext^2(R/(x,y^n), N) = 0 for N in {R, k, R/(x)}", nullptr, [&] {
        std::vector<FinitelyPresentedModule> targets = {FinitelyPresentedModule::free(R, 1), k,
                                                        FinitelyPresentedModule::cyclic(R, "(x)")};
        for (int n = 1; n <= 3; ++n)
            for (const auto& N : targets)
                if (!annihilates_ext(R.parse("y"), FinitelyPresentedModule::cyclic(R, "(x, y^" + std::to_string(n) + ")"),
                                     N, 2))
                    return "fails for n = " + std::to_string(n);
        return std::string();
    });
    run("ext-kk", "Ext^2(k,k) has dimension 3 and 1 does not annihilate it", nullptr, [&] {
        auto E = ext_module(k, k, 2);
        return fail_unless(ext_k_dimension(E) == std::optional<std::size_t>(3) && !annihilates(R.one(), E.module),
                           "Ext^2(k,k) differs");
    });
    auto corpus = default_corpus(R, options.seed);
    run("ca-y", "y Ext^3(M, N) = 0 on the default corpus", nullptr, [&] {
        return fail_unless(ca_witness(R.parse("y"), 3, corpus).all_pass(), "some pair failed");
    });
    run("ca-socle", "the socle element x lies in ca^3 on the default corpus", nullptr, [&] {
        return fail_unless(ca_witness(R.parse("x"), 3, corpus).all_pass(), "some pair failed");
    });
    run("stable-ann", "x and y kill every corpus module in D_sg (stable test on Omega^2); 1 fails on k", nullptr, [&] {
        for (const auto& c : corpus)
            if (!shifted_stable_annihilation_test(R.parse("x"), c.module, 2) ||
                !shifted_stable_annihilation_test(R.parse("y"), c.module, 2))
                return "fails on " + c.name;
        return fail_unless(!stable_annihilation_test(R.one(), k), "1 passes on k");
    });
    auto boundsR = annihilator_bounds(R, {}, options.seed);
    run("bound-example", "dim D_sg(R) <= 3 ll(R/m) - 1 = 2", nullptr, [&] {
        auto b = generation_time_bound(R, IdealHandle::maximal(R), &boundsR);
        return fail_unless(b.bound == 3 && b.dim_bound == 2, "bound differs");
    });
    run("isolated-example", "Q[x,y]/(x^2,xy) has an isolated singularity", &R,
        [&] { return fail_unless(is_isolated_singularity(R).value == Tristate::True, "not isolated"); });
    run("isolated-fail", "Q[x,y,z,w]/(x^2,yz,yw): unknown, (x,z,w) is a singular witness", &S, [&] {
        auto iso = is_isolated_singularity(S);
        bool found = false;
        for (const auto& w : iso.witnesses)
            found = found || (w.variables == std::vector<std::size_t>{0, 2, 3} && !w.contains_jac);
        return fail_unless(iso.value == Tristate::Unknown && found, "witness missing");
    });
    run("radical-example", "sqrt jac(R) = sqrt(lower annihilator bound) = (x, y)", &R, [&] {
        auto cmp = radical_comparison_report(R, boundsR);
        return fail_unless(cmp.relation == RadicalRelation::Equal &&
                               ideal_equal(boundsR.lower, IdealHandle::maximal(R)),
                           "radicals differ");
    });
    run("radical-fail", "jac(S) is not inside sqrt(lower bound); witness (x,z,w)", &S, [&] {
        auto cmp = radical_comparison_report(S, annihilator_bounds(S, {}, options.seed));
        bool witness = std::find(cmp.witness_primes.begin(), cmp.witness_primes.end(), "(x, z, w)") !=
                       cmp.witness_primes.end();
        return fail_unless(cmp.failure_pattern && witness, "failure pattern not reproduced");
    });
    return ledger;
}

}  // namespace singulant
