#include "irrev/verify.hpp"

#include "irrev/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace irrev {

Rational random_small_rational(SplitMix64& rng, long max_num, long max_den) {
    long num = rng.range(-max_num, max_num);
    long den = rng.range(1, max_den);
    return Rational(num, den);
}

Polynomial random_polynomial(SplitMix64& rng, std::size_t dim, unsigned max_degree,
                             unsigned terms) {
    Polynomial p(dim);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(dim);
        unsigned degree = static_cast<unsigned>(rng.below(max_degree + 1));
        for (unsigned d = 0; d < degree; ++d) m.exps[rng.below(dim)] += 1;
        Rational c(rng.range(-6, 6));
        p = p + Polynomial::term(dim, std::move(m), std::move(c));
    }
    return p;
}

void VerificationReport::add_pass(std::string name) {
    checks_.push_back({std::move(name), CheckStatus::pass, ""});
}

void VerificationReport::add_fail(std::string name, std::string residual) {
    if (residual.empty()) residual = "(nonzero)";
    checks_.push_back({std::move(name), CheckStatus::fail, std::move(residual)});
}

void VerificationReport::add_trivial(std::string name, std::string note) {
    checks_.push_back({std::move(name), CheckStatus::trivial, std::move(note)});
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& c : other.checks_)
        checks_.push_back({other.subject_ + "/" + c.name, c.status, c.residual});
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks_)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

namespace {
const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::trivial: return "trivial";
    }
    return "?";
}
} // namespace

std::string VerificationReport::text() const {
    std::ostringstream out;
    out << "verification: " << subject_ << " (seed=" << seed_ << ")\n";
    for (const auto& c : checks_) {
        out << "  [" << status_name(c.status) << "] " << c.name;
        if (!c.residual.empty()) out << "  residual: " << c.residual;
        out << "\n";
    }
    out << (all_passed() ? "  => all checks passed\n" : "  => FAILURES present\n");
    return out.str();
}

std::string VerificationReport::machine() const {
    std::ostringstream out;
    for (const auto& c : checks_)
        out << subject_ << "\t" << c.name << "\t" << status_name(c.status) << "\t" << c.residual
            << "\n";
    return out.str();
}

VerificationReport check_jacobi(const BivectorField& P) {
    VerificationReport rep("jacobi");
    if (P.dim() < 3) {
        rep.add_trivial("[pi,pi] == 0", "trivially zero: chart dimension < 3");
        return rep;
    }
    TrivectorField t = schouten_bb(P, P);
    if (t.is_zero())
        rep.add_pass("[pi,pi] == 0");
    else
        rep.add_fail("[pi,pi] == 0", t.describe());
    return rep;
}

VerificationReport check_cocycle(const BivectorField& P, const BivectorField& a) {
    if (P.chart() != a.chart()) throw std::invalid_argument("check_cocycle: chart mismatch");
    VerificationReport rep("cocycle");
    if (P.dim() < 3) {
        rep.add_trivial("[pi,a] == 0", "trivially zero: chart dimension < 3");
        rep.add_trivial("[a,a] == 0", "trivially zero: chart dimension < 3");
        return rep;
    }
    TrivectorField t1 = schouten_bb(P, a);
    if (t1.is_zero())
        rep.add_pass("[pi,a] == 0");
    else
        rep.add_fail("[pi,a] == 0", t1.describe());
    TrivectorField t2 = schouten_bb(a, a);
    if (t2.is_zero())
        rep.add_pass("[a,a] == 0");
    else
        rep.add_fail("[a,a] == 0", t2.describe());
    return rep;
}

VerificationReport check_casimir(const BivectorField& P, const Polynomial& C,
                                 const std::string& casimir_name) {
    if (C.dim() != P.dim())
        throw std::invalid_argument("check_casimir: dimension mismatch: " +
                                    std::to_string(C.dim()) + " vs " + std::to_string(P.dim()));
    VerificationReport rep("casimir");
    VectorField r = sharp(P, C);
    if (r.is_zero())
        rep.add_pass("sharp(pi, " + casimir_name + ") == 0");
    else
        rep.add_fail("sharp(pi, " + casimir_name + ") == 0", describe(r));
    return rep;
}

VerificationReport check_metriplectic_axioms(const MetriplecticSystem& sys, std::uint64_t seed) {
    VerificationReport rep("metriplectic axioms: " + sys.name(), seed);
    std::size_t n = sys.chart().dim();

    // (i) entropy is a Casimir of the base bracket
    VectorField sres = sharp(sys.structure().base(), sys.entropy());
    if (sres.is_zero())
        rep.add_pass("S is a Casimir of the base bracket");
    else
        rep.add_fail("S is a Casimir of the base bracket", describe(sres));

    // (ii) ((H, x_i)) == 0 for every coordinate
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial v = symmetric_bracket(sys, sys.hamiltonian(), Polynomial::variable(n, i));
        if (!v.is_zero()) {
            ok = false;
            bad = sys.chart().names[i] + ": " + render(v, sys.chart().names);
            break;
        }
    }
    if (ok)
        rep.add_pass("((H, x_i)) == 0 for all coordinates");
    else
        rep.add_fail("((H, x_i)) == 0 for all coordinates", bad);

    // (iii) dS/dt along the full field equals tau * a(dS,dH)^2
    VectorField X = metriplectic_field(sys);
    Polynomial dS(n);
    for (std::size_t i = 0; i < n; ++i) dS = dS + sys.entropy().diff(i) * X.component(i);
    Polynomial production = production_polynomial(sys);
    if (!(dS == production)) {
        rep.add_fail("dS/dt == tau * a(dS,dH)^2",
                     render(dS - production, sys.chart().names));
    } else if (production.is_zero()) {
        rep.add_trivial("dS/dt == tau * a(dS,dH)^2",
                        "isentropic: production is identically zero");
    } else {
        rep.add_pass("dS/dt == tau * a(dS,dH)^2");
    }

    // (iv) ((f,f)) >= 0 spot check, exact rational arithmetic
    SplitMix64 rng(seed);
    bool nonneg = true;
    std::string witness;
    for (unsigned k = 0; k < 10 && nonneg; ++k) {
        Polynomial f = random_polynomial(rng, n, 2, 4);
        Polynomial ff = symmetric_bracket(sys, f, f);
        for (unsigned q = 0; q < 100; ++q) {
            std::vector<Rational> pt;
            pt.reserve(n);
            for (std::size_t i = 0; i < n; ++i) pt.push_back(random_small_rational(rng));
            Rational v = ff.eval(pt);
            if (v < 0) {
                nonneg = false;
                witness = "((f,f)) = " + to_string(v) + " < 0";
                break;
            }
        }
    }
    if (nonneg)
        rep.add_pass("((f,f)) >= 0 at 1000 random rational points");
    else
        rep.add_fail("((f,f)) >= 0 at 1000 random rational points", witness);
    return rep;
}

VerificationReport gradient_fd_check(const Polynomial& f, std::size_t points,
                                     std::uint64_t seed) {
    VerificationReport rep("gradient finite-difference", seed);
    std::size_t n = f.dim();
    const double h = 1e-5;
    SplitMix64 rng(seed);
    double worst = 0.0;
    for (std::size_t s = 0; s < points; ++s) {
        std::vector<double> x(n);
        for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            double exact = f.diff(i).eval(std::span<const double>(x));
            std::vector<double> xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            double fd = (f.eval(std::span<const double>(xp)) -
                         f.eval(std::span<const double>(xm))) /
                        (2.0 * h);
            double rel = std::abs(fd - exact) / std::max(1.0, std::abs(exact));
            if (rel > worst) worst = rel;
        }
    }
    if (worst < 1e-6)
        rep.add_pass("symbolic gradient matches central differences (rel err " +
                     std::to_string(worst) + ")");
    else
        rep.add_fail("symbolic gradient matches central differences",
                     "max relative error " + std::to_string(worst));
    return rep;
}

VerificationReport check_model(const ModelDescriptor& model, std::uint64_t seed,
                               const std::optional<Polynomial>& hamiltonian) {
    VerificationReport rep(model.name, seed);
    rep.merge(check_jacobi(model.base));
    if (model.cocycle) rep.merge(check_cocycle(model.base, *model.cocycle));
    for (const auto& [cname, cpoly] : model.casimirs)
        rep.merge(check_casimir(model.base, cpoly, cname));
    BivectorField def = model.deformed();
    for (const auto& [cname, cpoly] : model.extended_casimirs)
        rep.merge(check_casimir(def, cpoly, cname + " (deformed bracket)"));
    // axioms with the supplied Hamiltonian, or a seeded random one
    Polynomial H = hamiltonian ? *hamiltonian : [&] {
        SplitMix64 rng(seed ^ 0x48aa);
        return random_polynomial(rng, model.chart.dim(), 2, 5);
    }();
    try {
        MetriplecticSystem sys = model.system(std::move(H));
        rep.merge(check_metriplectic_axioms(sys, seed));
    } catch (const std::invalid_argument& e) {
        rep.add_fail("metriplectic system construction", e.what());
    }
    return rep;
}

} // namespace irrev
