#include "singulant/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "singulant/parse.hpp"
#include "singulant/report.hpp"

namespace singulant {

namespace {

using json = nlohmann::ordered_json;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void advance()
    {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col); }
    void expect(char c)
    {
        skip_space();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }
    std::string identifier()
    {
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("expected a variable name");
        std::string s;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            s += peek();
            advance();
        }
        return s;
    }
};

}  // namespace

RingPresentation parse_ring(std::string_view text, MonomialOrder order)
{
    Cursor c{text};
    c.skip_space();
    if (c.identifier() != "ring")
        throw ParseError("expected 'ring'", 1, 1);
    c.skip_space();
    std::size_t fline = c.line, fcol = c.col;
    Field field = Field::rationals();
    if (c.peek() == 'Q') {
        c.advance();
    } else if (c.peek() == 'F') {
        c.advance();
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            digits += c.peek();
            c.advance();
        }
        if (digits.empty() || digits.size() > 9)
            throw ParseError("expected a prime after F", fline, fcol);
        try {
            field = Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
        } catch (const std::exception&) {
            throw ParseError("F" + digits + " is not a prime field", fline, fcol);
        }
    } else {
        c.fail("expected field Q or F<p>");
    }
    c.expect('[');
    std::vector<std::string> names;
    std::set<std::string> seen;
    c.skip_space();
    if (c.peek() != ']') {
        while (true) {
            c.skip_space();
            std::size_t l = c.line, col = c.col;
            auto name = c.identifier();
            if (!seen.insert(name).second)
                throw ParseError("duplicate variable '" + name + "'", l, col);
            names.push_back(name);
            c.skip_space();
            if (c.peek() == ',') {
                c.advance();
                continue;
            }
            break;
        }
    }
    c.expect(']');
    c.skip_space();
    std::vector<Polynomial> gens;
    auto ring = make_ring(field, names.size(), order);
    if (!c.done()) {
        c.expect('/');
        c.skip_space();
        std::size_t l = c.line, col = c.col;
        try {
            gens = parse_polynomial_list(text.substr(c.pos), ring, names);
        } catch (const ParseError& e) {
            if (e.line() == 1)
                throw ParseError(e.message(), l, col + e.column() - 1);
            throw ParseError(e.message(), l + e.line() - 1, e.column());
        }
        for (const auto& g : gens)
            if (g.is_zero())
                throw ParseError("zero generator in the defining ideal", l, col);
    }
    return RingPresentation(field, std::move(names), std::move(gens), std::move(order));
}

FinitelyPresentedModule parse_module(std::string_view text, const RingPresentation& R)
{
    std::string t(text);
    t.erase(0, t.find_first_not_of(" \t\n"));
    t.erase(t.find_last_not_of(" \t\n") + 1);
    if (t == "R")
        return FinitelyPresentedModule::free(R, 1);
    if (t == "k")
        return FinitelyPresentedModule::cyclic(IdealHandle::maximal(R));
    if (t.rfind("R^", 0) == 0) {
        auto digits = t.substr(2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
            throw ParseError("expected a rank after R^", 1, 3);
        return FinitelyPresentedModule::free(R, std::stoul(digits));
    }
    if (t.rfind("R/", 0) == 0) {
        try {
            return FinitelyPresentedModule::cyclic(IdealHandle(R, parse_polynomial_list(t.substr(2), R.ring(), R.names())));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), e.line(), e.line() == 1 ? e.column() + 2 : e.column());
        }
    }
    if (!t.empty() && t[0] == '[')
        return FinitelyPresentedModule(R, parse_matrix(t, R.ring(), R.names()));
    throw ParseError("expected R, R^n, k, R/(...) or [[...]]", 1, 1);
}

// ---------------------------------------------------------------------------

namespace {

struct Options {
    std::string command;
    std::string ring;
    std::string ideal;
    std::string module;
    std::string target;
    std::string sequence;
    std::vector<std::string> elements;
    std::string format = "text";
    std::string order = "grevlex";
    std::optional<std::size_t> degree;
    std::size_t length = 3;
    std::size_t shift = 0;
    long max_degree = 0;
    long max_steps = 0;
    std::uint64_t seed = 42;
    bool assume_annihilates = false;
    std::uint32_t characteristic = 0;
    bool corrupt_jacobian = false;
};

const std::vector<std::string> commands = {"jac",    "dim",        "height", "depth",   "socle",          "loewy",
                                           "nu",     "equidim",    "minimal-primes",    "isolated", "resolve",
                                           "ext",    "ext-ann",    "koszul", "stable-ann", "bound", "report",
                                           "verify-paper"};

json poly_json(const Polynomial& p)
{
    json terms = json::array();
    for (const auto& t : p.terms()) {
        std::vector<int> e(t.mono.exponents().begin(), t.mono.exponents().end());
        terms.push_back({{"coeff", t.coeff.get_str()}, {"exponents", e}});
    }
    return terms;
}

json matrix_json(const RingPresentation& R, const PolyMatrix& m)
{
    json rows = json::array(), text = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array(), trow = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(poly_json(m(i, j)));
            trow.push_back(R.str(m(i, j)));
        }
        rows.push_back(row);
        text.push_back(trow);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}, {"text", text}};
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

std::string paren(const std::vector<std::string>& v)
{
    return "(" + join(v) + ")";
}

std::vector<std::string> column_strings(const RingPresentation& R, const ModuleElement& v)
{
    std::vector<std::string> out;
    for (const auto& c : v.coords())
        out.push_back(R.str(c));
    return out;
}

struct Context {
    const Options& opt;
    RingPresentation R;
    json j;
    std::ostream& text;

    IdealHandle ideal_or(IdealHandle fallback) const
    {
        return opt.ideal.empty() ? fallback : IdealHandle::from_text(R, opt.ideal);
    }
    FinitelyPresentedModule module_or(const std::string& text_value, const std::string& fallback) const
    {
        return parse_module(text_value.empty() ? fallback : text_value, R);
    }
    Polynomial element() const
    {
        if (opt.elements.empty())
            throw PreconditionError("--element is required");
        return R.parse(opt.elements.front());
    }
    std::size_t degree_or(std::size_t fallback) const { return opt.degree ? *opt.degree : fallback; }
};

int run_command(Context& c)
{
    const auto& opt = c.opt;
    const auto& R = c.R;
    auto& out = c.text;
    auto& j = c.j;
    const std::string& cmd = opt.command;

    if (cmd == "jac") {
        auto data = jacobian_data(R);
        auto cert = singular_locus_certificate(R);
        auto gens = normalized_strings(data.jac_ideal);
        j["gens"] = gens;
        j["h"] = data.h;
        j["criterion"] = to_string(cert.valid);
        j["matrix"] = matrix_json(R, data.matrix);
        j["minor_count"] = data.minors.size();
        j["warnings"] = data.warnings;
        out << "jac: " << paren(gens) << "\nh: " << data.h << "\ncriterion: " << to_string(cert.valid) << "\n";
        for (const auto& w : data.warnings)
            out << "warning: " << w << "\n";
    } else if (cmd == "dim") {
        int d = krull_dimension(c.ideal_or(IdealHandle(R, {})));
        j["dim"] = d;
        out << "dim: " << d << "\n";
    } else if (cmd == "height") {
        int h = height(c.ideal_or(IdealHandle(R, {})));
        j["height"] = h;
        out << "height: " << h << "\n";
    } else if (cmd == "depth") {
        auto M = c.module_or(opt.module, "R");
        int pd = projective_dimension_over_P(M);
        int d = static_cast<int>(R.nvars()) - pd;
        j["depth"] = d;
        j["pd_over_P"] = pd;
        j["local_reading_verified"] = M.graded();
        out << "depth: " << d << "\npd over P: " << pd << "\n";
        if (!M.graded())
            out << "note: local reading unverified (non-homogeneous presentation)\n";
    } else if (cmd == "socle") {
        auto gens = normalized_strings(socle(R));
        j["gens"] = gens;
        out << "socle: " << paren(gens) << "\n";
    } else if (cmd == "loewy") {
        auto I = c.ideal_or(IdealHandle::maximal(R));
        int l = loewy_length(I);
        j["ideal"] = normalized_strings(I);
        j["loewy"] = l;
        out << "loewy length: " << l << "\n";
    } else if (cmd == "nu") {
        auto I = c.ideal_or(IdealHandle::maximal(R));
        int n = minimal_generators(I);
        j["ideal"] = normalized_strings(I);
        j["nu"] = n;
        out << "nu: " << n << "\n";
    } else if (cmd == "equidim") {
        auto v = is_equidimensional(R);
        j["equidimensional"] = to_string(v);
        out << "equidimensional: " << to_string(v) << "\n";
    } else if (cmd == "minimal-primes") {
        auto I = c.ideal_or(IdealHandle(R, {}));
        json primes = json::array();
        for (const auto& p : minimal_primes_monomial(I)) {
            auto gens = normalized_strings(p);
            int d = krull_dimension(p);
            primes.push_back({{"gens", gens}, {"dim", d}});
            out << paren(gens) << "  dim " << d << "\n";
        }
        j["primes"] = primes;
    } else if (cmd == "isolated") {
        auto iso = is_isolated_singularity(R);
        json w = json::array();
        out << "isolated: " << to_string(iso.value) << (iso.regular ? " (regular)" : "") << "\ncriterion: "
            << to_string(iso.criterion) << "\n";
        for (const auto& s : iso.witnesses) {
            std::vector<std::string> vars;
            for (auto v : s.variables)
                vars.push_back(R.names()[v]);
            w.push_back({{"prime", paren(vars)}, {"contains_jac", s.contains_jac}});
            out << "singular witness: " << paren(vars) << (s.contains_jac ? "" : "  (jac not contained)") << "\n";
        }
        j["isolated"] = to_string(iso.value);
        j["regular"] = iso.regular;
        j["criterion"] = to_string(iso.criterion);
        j["witnesses"] = w;
    } else if (cmd == "resolve") {
        auto M = c.module_or(opt.module, "k");
        auto res = free_resolution(M, opt.length);
        bool d2 = composes_to_zero(res), exact = exactness_certified(res);
        std::vector<std::size_t> ranks = res.ranks;
        json ds = json::array();
        for (const auto& d : res.differentials)
            ds.push_back(matrix_json(R, d));
        j["ranks"] = ranks;
        j["minimal"] = res.minimal;
        j["complete"] = res.complete;
        j["d_squared_zero"] = d2;
        j["exact"] = exact;
        j["differentials"] = ds;
        std::vector<std::string> rs;
        for (auto r : ranks)
            rs.push_back(std::to_string(r));
        out << "betti: " << join(rs, " ") << "\nminimal: " << (res.minimal ? "true" : "false")
            << "\ncomplete: " << (res.complete ? "true" : "false") << "\nd^2 = 0: " << (d2 ? "true" : "false")
            << "\nexact: " << (exact ? "true" : "false") << "\n";
        for (std::size_t i = 1; i <= res.length(); ++i) {
            const auto& d = res.d(i);
            out << "d" << i << ":\n";
            for (std::size_t r = 0; r < d.rows(); ++r) {
                std::vector<std::string> row;
                for (std::size_t col = 0; col < d.cols(); ++col)
                    row.push_back(R.str(d(r, col)));
                out << "  [" << join(row) << "]\n";
            }
        }
    } else if (cmd == "ext") {
        auto M = c.module_or(opt.module, "k");
        auto N = c.module_or(opt.target, "k");
        std::size_t i = c.degree_or(1);
        auto E = ext_module(M, N, i);
        bool zero = E.module.is_zero();
        auto dim = ext_k_dimension(E);
        json cycles = json::array();
        for (const auto& z : E.module.cycles)
            cycles.push_back(column_strings(R, z));
        j["degree"] = i;
        j["zero"] = zero;
        j["k_dim"] = dim ? json(*dim) : json(nullptr);
        j["ambient_rank"] = E.module.rank;
        j["cycles"] = cycles;
        j["boundary_count"] = E.module.boundaries.size();
        out << "Ext^" << i << ": " << (zero ? "zero" : "nonzero") << "\nk-dimension: "
            << (dim ? std::to_string(*dim) : std::string("infinite")) << "\ncycles: " << E.module.cycles.size()
            << " in rank " << E.module.rank << "\n";
    } else if (cmd == "ext-ann") {
        auto r = c.element();
        auto M = c.module_or(opt.module, "k");
        auto N = c.module_or(opt.target, "k");
        std::size_t i = c.degree_or(1);
        bool a = annihilates_ext(r, M, N, i);
        j["element"] = R.str(r);
        j["degree"] = i;
        j["annihilates"] = a;
        out << R.str(r) << (a ? " annihilates " : " does not annihilate ") << "Ext^" << i << "(M, N)\n";
    } else if (cmd == "koszul") {
        auto M = c.module_or(opt.module, "R");
        std::vector<Polynomial> f;
        if (opt.sequence.empty())
            for (std::size_t v = 0; v < R.nvars(); ++v)
                f.push_back(R.variable(v));
        else
            f = parse_polynomial_list(opt.sequence, R.ring(), R.names());
        std::vector<std::size_t> degrees;
        if (opt.degree) {
            if (*opt.degree > f.size())
                throw PreconditionError("Koszul degree out of range");
            degrees.push_back(*opt.degree);
        } else {
            for (std::size_t i = 0; i <= f.size(); ++i)
                degrees.push_back(i);
        }
        json hs = json::array();
        for (auto i : degrees) {
            auto H = koszul_cohomology(f, M, i);
            bool zero = H.is_zero();
            auto dim = zero ? std::optional<std::size_t>(0) : k_dimension(H);
            hs.push_back({{"degree", i},
                          {"zero", zero},
                          {"k_dim", dim ? json(*dim) : json(nullptr)},
                          {"generators", H.generator_count()},
                          {"relations", H.relation_count()}});
            out << "H^" << i << ": " << (zero ? "0" : "nonzero") << ", k-dimension "
                << (dim ? std::to_string(*dim) : std::string("infinite")) << "\n";
        }
        j["cohomology"] = hs;
        j["support_check"] = koszul_support_check(f, M);
        out << "support check: " << (j["support_check"].get<bool>() ? "pass" : "fail") << "\n";
    } else if (cmd == "stable-ann") {
        auto r = c.element();
        auto M = c.module_or(opt.module, "k");
        bool ok = opt.shift == 0 ? stable_annihilation_test(r, M) : shifted_stable_annihilation_test(r, M, opt.shift);
        j["element"] = R.str(r);
        j["shift"] = opt.shift;
        j["passes"] = ok;
        out << "stable annihilation of " << R.str(r) << " on Omega^" << opt.shift << "(M): "
            << (ok ? "pass" : "fail") << "\n";
    } else if (cmd == "bound") {
        auto I = c.ideal_or(IdealHandle::maximal(R));
        auto b = generation_time_bound(R, I, nullptr, opt.assume_annihilates, opt.seed);
        j["I_gens"] = normalized_strings(I);
        j["nu"] = b.nu;
        j["loewy"] = b.loewy;
        j["depth"] = b.depth;
        j["generation_time"] = b.bound;
        j["dim_sg_bound"] = b.dim_bound;
        j["assumed_annihilates"] = b.assumed_annihilates;
        out << "nu: " << b.nu << "\nloewy: " << b.loewy << "\ndepth: " << b.depth << "\ngeneration time: " << b.bound
            << "\ndim D_sg bound: " << b.dim_bound << "\n";
        if (b.assumed_annihilates)
            out << "note: I assumed to annihilate D_sg(R) (--assume-annihilates)\n";
    } else if (cmd == "report") {
        ReportOptions ro;
        for (const auto& e : opt.elements)
            ro.extra_elements.push_back(R.parse(e));
        if (!opt.ideal.empty())
            ro.ideal = IdealHandle::from_text(R, opt.ideal);
        ro.assume_annihilates = opt.assume_annihilates;
        ro.seed = opt.seed;
        auto rep = singularity_report(R, ro);
        auto rj = to_json(rep);
        for (auto it = rj.begin(); it != rj.end(); ++it)
            j[it.key()] = it.value();
        out << "ring: " << rj["ring"].get<std::string>() << "\ndim: " << rep.dim << "\ndepth: " << rep.depth
            << "\njac: " << paren(rj["jac"]["gens"].get<std::vector<std::string>>()) << "  ["
            << rj["jac"]["criterion"].get<std::string>() << "]\nequidimensional: " << to_string(rep.equidimensional)
            << "\nisolated: " << to_string(rep.isolated.value) << "\nsocle: "
            << paren(rj["socle"]["gens"].get<std::vector<std::string>>()) << "\nann lower bound: "
            << paren(rj["ann_bounds"]["lower_gens"].get<std::vector<std::string>>())
            << (rep.bounds.regular ? "  [regular ring]" : "  [corpus evidence]") << "\n";
        for (const auto& e : rep.bounds.exclusions)
            out << "exclusion: " << e.claim << " (M = " << e.module_m << ")\n";
        if (rep.radical)
            out << "radical comparison: " << to_string(rep.radical->relation) << "\n";
        if (rep.bound)
            out << "bound: nu " << rep.bound->nu << ", loewy " << rep.bound->loewy << ", generation time "
                << rep.bound->bound << ", dim D_sg <= " << rep.bound->dim_bound << "\n";
        for (const auto& h : rep.hypotheses)
            out << "hypothesis: " << h << "\n";
    }
    return ExitOk;
}

int verify_paper(const Options& opt, std::ostream& out)
{
    PaperCheckOptions po;
    po.corrupt_jacobian = opt.corrupt_jacobian;
    po.seed = opt.seed;
    if (opt.characteristic)
        po.field = Field::prime(opt.characteristic);
    auto ledger = verify_paper_examples(po);
    bool ok = true;
    json entries = json::array();
    for (const auto& e : ledger) {
        ok = ok && e.status != LedgerStatus::Fail;
        entries.push_back({{"id", e.id}, {"claim", e.claim}, {"status", to_string(e.status)}, {"detail", e.detail}});
    }
    if (opt.format == "json") {
        json j;
        j["command"] = "verify-paper";
        j["field"] = po.field.name();
        j["entries"] = entries;
        j["all_pass"] = ok;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& e : ledger)
            out << "[" << to_string(e.status) << "] " << e.id << ": " << e.claim
                << (e.detail.empty() ? "" : " -- " + e.detail) << "\n";
    }
    return ok ? ExitOk : ExitPrecondition;
}

bool env_long(const char* name, long& value, std::ostream& err)
{
    const char* v = std::getenv(name);
    if (!v)
        return true;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (*v == '\0' || *end != '\0' || parsed <= 0) {
        err << "error: " << name << " must be a positive integer\n";
        return false;
    }
    value = parsed;
    return true;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"singulant: singularity invariants of finitely presented commutative rings"};
    app.add_option("command", opt.command, "Command to run")->required()->check(CLI::IsMember(commands));
    app.add_option("ring", opt.ring, "Ring presentation, e.g. \"ring Q[x,y] / (x^2, x*y)\"");
    app.add_option("--ideal", opt.ideal, "Ideal of R as a generator list \"(g1, ...)\"");
    app.add_option("--module", opt.module, "Module: R, R^n, k, R/(g1, ...) or [[...]]");
    app.add_option("--target", opt.target, "Second module argument of ext / ext-ann");
    app.add_option("--sequence", opt.sequence, "Koszul sequence \"(f1, ...)\"; default: the variables");
    app.add_option("--element", opt.elements, "Ring element (repeatable for report)");
    app.add_option("-i,--degree", opt.degree, "Homological or cohomological degree");
    app.add_option("--length", opt.length, "Resolution length")->check(CLI::Range(0, 64));
    app.add_option("--shift", opt.shift, "Syzygy shift for stable-ann")->check(CLI::Range(0, 16));
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--order", opt.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_option("--max-degree", opt.max_degree, "Degree budget")->check(CLI::PositiveNumber);
    app.add_option("--max-steps", opt.max_steps, "Reduction-step budget")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Corpus seed");
    app.add_flag("--assume-annihilates", opt.assume_annihilates, "Skip the annihilator certificate for bound");
    app.add_option("--char", opt.characteristic, "verify-paper: run over F_p");
    app.add_flag("--corrupt-jacobian", opt.corrupt_jacobian, "verify-paper: fault injection");

    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitParse;
    }

    Budget budget;
    long md = budget.max_degree, ms = budget.max_steps;
    if (!env_long("SINGULANT_MAX_DEGREE", md, err) || !env_long("SINGULANT_MAX_STEPS", ms, err))
        return ExitParse;
    long seed_env = 0;
    if (!app.count("--seed")) {
        if (!env_long("SINGULANT_SEED", seed_env, err))
            return ExitParse;
        if (seed_env > 0)
            opt.seed = static_cast<std::uint64_t>(seed_env);
    }
    if (app.count("--max-degree"))
        md = opt.max_degree;
    if (app.count("--max-steps"))
        ms = opt.max_steps;
    budget.max_degree = static_cast<int>(std::min<long>(md, 1 << 20));
    budget.max_steps = ms;
    struct Restore {
        Budget saved = Budget::current();
        ~Restore() { Budget::set_current(saved); }
    } restore;
    Budget::set_current(budget);

    try {
        if (opt.command == "verify-paper")
            return verify_paper(opt, out);
        if (opt.ring.empty()) {
            err << "error: a ring presentation is required for '" << opt.command << "'\n";
            return ExitParse;
        }
        auto order = opt.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
        std::ostringstream text;
        Context run{opt, parse_ring(opt.ring, order), json::object(), text};
        run.j["command"] = opt.command;
        run.j["ring"] = run.R.to_string();
        int code = run_command(run);
        if (opt.format == "json")
            out << run.j.dump(2) << "\n";
        else
            out << text.str();
        return code;
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
        return ExitParse;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return ExitParse;
    } catch (const ResourceError& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return ExitBudget;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return ExitPrecondition;
    } catch (const UnsupportedInput& e) {
        err << "unsupported input: " << e.what() << "\n";
        return ExitPrecondition;
    }
}

}  // namespace singulant
