#include "irrev/fields.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace irrev {

CoordinateChart::CoordinateChart(std::vector<std::string> n) : names(std::move(n)) {
    if (names.empty()) throw std::invalid_argument("chart needs at least one coordinate");
    std::set<std::string> seen;
    for (const auto& nm : names) {
        if (nm.empty()) throw std::invalid_argument("empty coordinate name");
        if (!seen.insert(nm).second)
            throw std::invalid_argument("duplicate coordinate name: " + nm);
    }
}

long CoordinateChart::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<long>(i);
    return -1;
}

VectorField::VectorField(CoordinateChart chart, std::vector<Polynomial> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
    if (comps_.size() != chart_.dim())
        throw std::invalid_argument("vector field needs one component per coordinate");
    for (const auto& p : comps_)
        if (p.dim() != chart_.dim())
            throw std::invalid_argument("vector field component has wrong dimension");
}

VectorField VectorField::zero(const CoordinateChart& chart) {
    return VectorField(chart, std::vector<Polynomial>(chart.dim(), Polynomial(chart.dim())));
}

bool VectorField::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

BivectorField::BivectorField(CoordinateChart chart) : chart_(std::move(chart)) {
    std::size_t n = chart_.dim();
    upper_.assign(n * (n - 1) / 2, Polynomial(n));
}

std::size_t BivectorField::pack(std::size_t i, std::size_t j) const {
    std::size_t n = chart_.dim();
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const Polynomial& BivectorField::upper(std::size_t i, std::size_t j) const {
    if (!(i < j && j < dim())) throw std::out_of_range("upper(i,j) requires i < j < dim");
    return upper_[pack(i, j)];
}

Polynomial BivectorField::component(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim()) throw std::out_of_range("bivector index out of range");
    if (i == j) return Polynomial(dim());
    if (i < j) return upper_[pack(i, j)];
    return -upper_[pack(j, i)];
}

void BivectorField::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= dim() || j >= dim()) throw std::out_of_range("bivector index out of range");
    if (i == j) throw std::invalid_argument("diagonal bivector entries are identically zero");
    if (p.dim() != dim()) throw std::invalid_argument("bivector entry has wrong dimension");
    if (i < j)
        upper_[pack(i, j)] = std::move(p);
    else
        upper_[pack(j, i)] = -p;
}

bool BivectorField::is_zero() const {
    for (const auto& p : upper_)
        if (!p.is_zero()) return false;
    return true;
}

BivectorField BivectorField::scaled(const Rational& c) const {
    BivectorField r(chart_);
    for (std::size_t k = 0; k < upper_.size(); ++k) r.upper_[k] = upper_[k].scaled(c);
    return r;
}

BivectorField operator+(const BivectorField& a, const BivectorField& b) {
    if (a.chart_ != b.chart_) throw std::invalid_argument("bivector chart mismatch");
    BivectorField r(a.chart_);
    for (std::size_t k = 0; k < a.upper_.size(); ++k) r.upper_[k] = a.upper_[k] + b.upper_[k];
    return r;
}

TrivectorField::TrivectorField(CoordinateChart chart) : chart_(std::move(chart)) {
    std::size_t n = chart_.dim();
    std::size_t count = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    comps_.assign(count, Polynomial(n));
}

std::size_t TrivectorField::pack(std::size_t i, std::size_t j, std::size_t k) const {
    // position of (i,j,k), i<j<k, in lexicographic enumeration of triples
    std::size_t n = chart_.dim(), idx = 0;
    for (std::size_t a = 0; a < i; ++a) idx += (n - 1 - a) * (n - 2 - a) / 2;
    for (std::size_t b = i + 1; b < j; ++b) idx += n - 1 - b;
    return idx + (k - j - 1);
}

const Polynomial& TrivectorField::upper(std::size_t i, std::size_t j, std::size_t k) const {
    if (!(i < j && j < k && k < dim()))
        throw std::out_of_range("upper(i,j,k) requires i < j < k < dim");
    return comps_[pack(i, j, k)];
}

void TrivectorField::set(std::size_t i, std::size_t j, std::size_t k, Polynomial p) {
    if (!(i < j && j < k && k < dim()))
        throw std::out_of_range("set(i,j,k) requires i < j < k < dim");
    if (p.dim() != dim()) throw std::invalid_argument("trivector entry has wrong dimension");
    comps_[pack(i, j, k)] = std::move(p);
}

Polynomial TrivectorField::component(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim() || j >= dim() || k >= dim())
        throw std::out_of_range("trivector index out of range");
    if (i == j || j == k || i == k) return Polynomial(dim());
    // sort and track permutation parity
    std::size_t a = i, b = j, c = k;
    bool flip = false;
    if (a > b) { std::swap(a, b); flip = !flip; }
    if (b > c) { std::swap(b, c); flip = !flip; }
    if (a > b) { std::swap(a, b); flip = !flip; }
    const Polynomial& v = comps_[pack(a, b, c)];
    return flip ? -v : v;
}

bool TrivectorField::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

std::string TrivectorField::describe() const {
    if (trivially_zero()) return "(trivially zero: dimension < 3)";
    std::ostringstream out;
    bool any = false;
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Polynomial& p = upper(i, j, k);
                if (p.is_zero()) continue;
                if (any) out << "; ";
                any = true;
                out << i << "," << j << "," << k << ": " << render(p, chart_.names);
            }
    return any ? out.str() : "0";
}

SymmetricTensorField::SymmetricTensorField(CoordinateChart chart) : chart_(std::move(chart)) {
    std::size_t n = chart_.dim();
    entries_.assign(n * (n + 1) / 2, Polynomial(n));
}

std::size_t SymmetricTensorField::pack(std::size_t i, std::size_t j) const {
    std::size_t n = chart_.dim();
    return i * (2 * n - i + 1) / 2 + (j - i);
}

const Polynomial& SymmetricTensorField::component(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim()) throw std::out_of_range("symmetric tensor index out of range");
    if (i > j) std::swap(i, j);
    return entries_[pack(i, j)];
}

void SymmetricTensorField::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= dim() || j >= dim()) throw std::out_of_range("symmetric tensor index out of range");
    if (p.dim() != dim()) throw std::invalid_argument("symmetric tensor entry has wrong dimension");
    if (i > j) std::swap(i, j);
    entries_[pack(i, j)] = std::move(p);
}

std::string describe(const BivectorField& b) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            const Polynomial& p = b.upper(i, j);
            if (p.is_zero()) continue;
            if (any) out << "; ";
            any = true;
            out << i << "," << j << ": " << render(p, b.chart().names);
        }
    return any ? out.str() : "0";
}

std::string describe(const VectorField& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out << ", ";
        out << render(v.component(i), v.chart().names);
    }
    out << ")";
    return out.str();
}

} // namespace irrev
