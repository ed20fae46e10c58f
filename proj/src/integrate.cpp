#include "irrev/integrate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace irrev {

Scheme scheme_from_string(std::string_view name) {
    if (name == "rk4") return Scheme::rk4;
    if (name == "midpoint") return Scheme::midpoint;
    throw std::invalid_argument("unknown scheme: " + std::string(name) +
                                " (expected rk4 or midpoint)");
}

std::string_view scheme_name(Scheme s) { return s == Scheme::rk4 ? "rk4" : "midpoint"; }

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) {
    terms_.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.coeff = to_double(c);
        for (std::uint32_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] > 0) t.powers.emplace_back(i, m.exps[i]);
        terms_.push_back(std::move(t));
    }
}

double CompiledPolynomial::eval(std::span<const double> x) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (auto [i, e] : t.powers) {
            double base = x[i];
            std::uint32_t n = e;
            while (n--) v *= base;
        }
        acc += v;
    }
    return acc;
}

CompiledField::CompiledField(const VectorField& f) {
    comps_.reserve(f.dim());
    for (std::size_t i = 0; i < f.dim(); ++i) comps_.emplace_back(f.component(i));
}

void CompiledField::eval(std::span<const double> x, std::span<double> out) const {
    for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = comps_[i].eval(x);
}

namespace {

void check_finite(std::span<const double> x, double t) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!std::isfinite(x[i]))
            throw IntegrationError("non-finite state at t = " + std::to_string(t) +
                                       ", component " + std::to_string(i),
                                   t);
}

std::vector<double> rk4_step(const CompiledField& f, std::span<const double> x, double dt) {
    std::size_t n = x.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n), out(n);
    f.eval(x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    f.eval(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    f.eval(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    f.eval(tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

std::vector<double> midpoint_step(const CompiledField& f, std::span<const double> x, double t,
                                  double dt) {
    constexpr int kMaxIter = 50;
    constexpr double kTol = 1e-13;
    std::size_t n = x.size();
    std::vector<double> y(x.begin(), x.end()), mid(n), fx(n), ynew(n);
    // explicit Euler predictor
    f.eval(x, fx);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + dt * fx[i];
    double resid = 0.0;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) mid[i] = 0.5 * (x[i] + y[i]);
        f.eval(mid, fx);
        resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ynew[i] = x[i] + dt * fx[i];
            resid = std::max(resid, std::abs(ynew[i] - y[i]));
        }
        y.swap(ynew);
        if (!std::isfinite(resid)) break;
        if (resid <= kTol) return y;
    }
    throw IntegrationError("implicit midpoint iteration did not converge at t = " +
                               std::to_string(t) + " (last residual " + std::to_string(resid) +
                               ")",
                           t);
}

} // namespace

std::vector<double> step(const CompiledField& f, std::span<const double> x, double t, double dt,
                         Scheme scheme) {
    if (!(dt > 0.0)) throw std::invalid_argument("step size must be positive");
    check_finite(x, t);
    std::vector<double> out =
        scheme == Scheme::rk4 ? rk4_step(f, x, dt) : midpoint_step(f, x, t, dt);
    check_finite(out, t + dt);
    return out;
}

std::vector<double> step(const VectorField& f, std::span<const double> x, double dt,
                         Scheme scheme) {
    return step(CompiledField(f), x, 0.0, dt, scheme);
}

Trajectory simulate(const MetriplecticSystem& sys, std::span<const double> x0, double dt,
                    long n_steps, Scheme scheme) {
    std::size_t n = sys.chart().dim();
    if (x0.size() != n)
        throw std::invalid_argument("initial state length " + std::to_string(x0.size()) +
                                    " does not match chart dimension " + std::to_string(n));
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");

    CompiledField field(metriplectic_field(sys));
    CompiledPolynomial H(sys.hamiltonian());
    CompiledPolynomial S(sys.entropy());
    CompiledPolynomial production(production_polynomial(sys));
    std::vector<std::string> casimir_names;
    std::vector<CompiledPolynomial> casimirs;
    for (const auto& [name, poly] : sys.casimirs()) {
        casimir_names.push_back(name);
        casimirs.emplace_back(poly);
    }
    for (const auto& [name, poly] : sys.extended_casimirs()) {
        casimir_names.push_back(name);
        casimirs.emplace_back(poly);
    }

    Trajectory tr;
    tr.dt = dt;
    tr.scheme = scheme;
    tr.coordinate_names = sys.chart().names;
    tr.casimir_names = casimir_names;
    tr.records.reserve(static_cast<std::size_t>(n_steps) + 1);

    auto record = [&](double t, const std::vector<double>& x) {
        DiagnosticRecord r;
        r.t = t;
        r.state = x;
        r.H = H.eval(x);
        r.S = S.eval(x);
        r.casimir_values.reserve(casimirs.size());
        for (const auto& c : casimirs) r.casimir_values.push_back(c.eval(x));
        r.production_rate = production.eval(x);
        tr.records.push_back(std::move(r));
    };

    std::vector<double> x(x0.begin(), x0.end());
    record(0.0, x);
    for (long k = 0; k < n_steps; ++k) {
        double t = static_cast<double>(k) * dt;
        try {
            x = step(field, x, t, dt, scheme);
        } catch (const IntegrationError& e) {
            throw SimulationError(e.what(), e.t(), std::move(tr));
        }
        record(static_cast<double>(k + 1) * dt, x);
    }
    return tr;
}

OrderEstimate estimate_order(const MetriplecticSystem& sys, std::span<const double> x0, double dt,
                             Scheme scheme) {
    constexpr long kCoarseSteps = 32;
    auto final_state = [&](double h, long steps) {
        Trajectory tr = simulate(sys, x0, h, steps, scheme);
        return tr.records.back().state;
    };
    std::vector<double> ref = final_state(dt / 16.0, kCoarseSteps * 16);
    auto err = [&](double h, long steps) {
        std::vector<double> x = final_state(h, steps);
        double e = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x[i] - ref[i]));
        return e;
    };
    double e1 = err(dt, kCoarseSteps);
    double e2 = err(dt / 2.0, kCoarseSteps * 2);
    double e4 = err(dt / 4.0, kCoarseSteps * 4);
    OrderEstimate est;
    if (e1 == 0.0 || e2 == 0.0 || e4 == 0.0) {
        est.note = "errors vanish at every step size; order undefined";
        return est;
    }
    est.order = 0.5 * (std::log2(e1 / e2) + std::log2(e2 / e4));
    est.defined = true;
    return est;
}

namespace {
void put(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}
} // namespace

void write_csv(std::ostream& out, const Trajectory& tr) {
    out << "t";
    for (const auto& n : tr.coordinate_names) out << "," << n;
    out << ",H,S";
    for (const auto& n : tr.casimir_names) out << "," << n;
    out << ",production\n";
    for (const auto& r : tr.records) {
        put(out, r.t);
        for (double v : r.state) {
            out << ",";
            put(out, v);
        }
        out << ",";
        put(out, r.H);
        out << ",";
        put(out, r.S);
        for (double v : r.casimir_values) {
            out << ",";
            put(out, v);
        }
        out << ",";
        put(out, r.production_rate);
        out << "\n";
    }
}

} // namespace irrev
