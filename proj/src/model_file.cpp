#include "irrev/parse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace irrev {

namespace {

std::string strip(const std::string& s, int* col_shift = nullptr) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        if (col_shift) *col_shift = 0;
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    if (col_shift) *col_shift = static_cast<int>(b);
    return s.substr(b, e - b + 1);
}

// strips a trailing comment that starts with '#'
std::string drop_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(strip(part));
    return out;
}

} // namespace

ModelFile parse_model_file(std::string_view text) {
    ModelFile mf;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::string section; // empty, "bivector", "cocycle", "casimirs"
    bool saw_coordinates = false, saw_hamiltonian = false, saw_entropy = false;
    bool saw_bivector = false;

    auto fail = [](const std::string& msg, int line, int col) -> void {
        throw ParseError(msg, line, col);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        int shift = 0;
        std::string line = strip(drop_comment(raw), &shift);
        if (line.empty()) continue;

        if (!section.empty()) {
            if (line == "}") {
                section.clear();
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos)
                fail("expected 'lhs = expression' inside section '" + section + "'", lineno,
                     shift + 1);
            std::string lhs = strip(line.substr(0, eq));
            int expr_col = shift + static_cast<int>(eq) + 2;
            std::string expression = line.substr(eq + 1);
            if (strip(expression).empty())
                fail("missing expression after '='", lineno, expr_col);
            if (section == "casimirs") {
                if (lhs.empty()) fail("missing Casimir name", lineno, shift + 1);
                mf.casimirs.push_back({lhs, expression, lineno, expr_col});
            } else {
                auto names = split_commas(lhs);
                if (names.size() != 2 || names[0].empty() || names[1].empty())
                    fail("expected a coordinate pair 'i, j' on the left of '='", lineno,
                         shift + 1);
                ModelFile::Entry entry{names[0], names[1], expression, lineno, expr_col};
                (section == "bivector" ? mf.bivector : mf.cocycle).push_back(std::move(entry));
            }
            continue;
        }

        if (line.size() >= 2 && line.back() == '{') {
            std::string name = strip(line.substr(0, line.size() - 1));
            if (name != "bivector" && name != "cocycle" && name != "casimirs")
                fail("unknown section '" + name + "'", lineno, shift + 1);
            if (name == "bivector") saw_bivector = true;
            if (name == "cocycle") mf.has_cocycle = true;
            section = name;
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("expected 'key = value' or 'section {'", lineno, shift + 1);
        std::string key = strip(line.substr(0, eq));
        int val_col = shift + static_cast<int>(eq) + 2;
        std::string value = strip(line.substr(eq + 1));
        if (key == "coordinates") {
            if (saw_coordinates) fail("duplicate 'coordinates' key", lineno, shift + 1);
            saw_coordinates = true;
            mf.coordinates = split_commas(value);
            for (const auto& c : mf.coordinates)
                if (c.empty()) fail("empty coordinate name", lineno, val_col);
        } else if (key == "hamiltonian") {
            if (saw_hamiltonian) fail("duplicate 'hamiltonian' key", lineno, shift + 1);
            saw_hamiltonian = true;
            mf.hamiltonian = raw.substr(raw.find('=') + 1);
            mf.hamiltonian = drop_comment(mf.hamiltonian);
            mf.hamiltonian_line = lineno;
            mf.hamiltonian_col = static_cast<int>(raw.find('=')) + 2;
        } else if (key == "entropy") {
            if (saw_entropy) fail("duplicate 'entropy' key", lineno, shift + 1);
            saw_entropy = true;
            mf.entropy = drop_comment(raw.substr(raw.find('=') + 1));
            mf.entropy_line = lineno;
            mf.entropy_col = static_cast<int>(raw.find('=')) + 2;
        } else if (key == "tau") {
            mf.tau = value;
        } else {
            fail("unknown key '" + key + "'", lineno, shift + 1);
        }
    }
    if (!section.empty())
        fail("section '" + section + "' is never closed with '}'", lineno, 1);
    if (!saw_coordinates) fail("missing required key 'coordinates'", lineno, 1);
    if (!saw_bivector) fail("missing required section 'bivector'", lineno, 1);
    if (!saw_hamiltonian) fail("missing required key 'hamiltonian'", lineno, 1);
    if (!saw_entropy) fail("missing required key 'entropy'", lineno, 1);
    return mf;
}

LoadedModel load_model_text(std::string_view text, const std::string& name, std::uint64_t seed) {
    ModelFile mf = parse_model_file(text);

    CoordinateChart chart;
    try {
        chart = CoordinateChart(mf.coordinates);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
    std::size_t n = chart.dim();

    auto build_bivector = [&](const std::vector<ModelFile::Entry>& entries, const char* what) {
        BivectorField b(chart);
        std::vector<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& e : entries) {
            long i = chart.index_of(e.i);
            long j = chart.index_of(e.j);
            if (i < 0) throw ParseError("unknown coordinate '" + e.i + "' in " + what, e.line, 1);
            if (j < 0) throw ParseError("unknown coordinate '" + e.j + "' in " + what, e.line, 1);
            if (i == j)
                throw ParseError("diagonal entry (" + e.i + "," + e.j + ") in " + what +
                                     " is identically zero and may not be listed",
                                 e.line, 1);
            std::pair<std::size_t, std::size_t> key{
                std::min(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                std::max(static_cast<std::size_t>(i), static_cast<std::size_t>(j))};
            for (const auto& s : seen)
                if (s == key)
                    throw ParseError("duplicate pair (" + e.i + "," + e.j + ") in " + what +
                                         " (listed twice, possibly in reversed order)",
                                     e.line, 1);
            seen.push_back(key);
            Polynomial p = parse_expression_at(e.expression, chart, e.line, e.expr_col);
            b.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::move(p));
        }
        return b;
    };

    BivectorField base = build_bivector(mf.bivector, "bivector");
    BivectorField cocycle =
        mf.has_cocycle ? build_bivector(mf.cocycle, "cocycle") : BivectorField(chart);

    Polynomial H = parse_expression_at(mf.hamiltonian, chart, mf.hamiltonian_line,
                                       mf.hamiltonian_col);
    Polynomial S = parse_expression_at(mf.entropy, chart, mf.entropy_line, mf.entropy_col);
    auto tau = rational_from_string(mf.tau);
    if (!tau) throw ParseError("malformed rational tau value '" + mf.tau + "'", 1, 1);

    std::vector<NamedPolynomial> casimirs;
    for (const auto& c : mf.casimirs)
        casimirs.push_back({c.name, parse_expression_at(c.expression, chart, c.line, c.expr_col)});

    VerificationReport rep(name, seed);
    rep.merge(check_jacobi(base));
    if (!rep.all_passed())
        throw VerificationFailure("model rejected: base bivector fails the Jacobi identity",
                                  rep);
    if (mf.has_cocycle) {
        rep.merge(check_cocycle(base, cocycle));
        if (!rep.all_passed())
            throw VerificationFailure("model rejected: cocycle conditions fail", rep);
    }
    for (const auto& [cname, cpoly] : casimirs) rep.merge(check_casimir(base, cpoly, cname));

    try {
        MetriplecticSystem sys(name, chart, DeformedPoissonStructure(base, cocycle), H, S, *tau,
                               casimirs, {});
        rep.merge(check_metriplectic_axioms(sys, seed));
        return LoadedModel{std::move(sys), std::move(rep)};
    } catch (const std::invalid_argument& e) {
        rep.add_fail("metriplectic system construction", e.what());
        throw VerificationFailure(std::string("model rejected: ") + e.what(), rep);
    }
}

LoadedModel load_model(const std::filesystem::path& path, std::uint64_t seed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model_text(buf.str(), path.stem().string(), seed);
}

} // namespace irrev
