#ifndef IRREV_FIELDS_HPP
#define IRREV_FIELDS_HPP

#include "irrev/polynomial.hpp"

#include <string>
#include <vector>

namespace irrev {

struct CoordinateChart {
    std::vector<std::string> names;

    CoordinateChart() = default;
    explicit CoordinateChart(std::vector<std::string> n);

    std::size_t dim() const { return names.size(); }
    // -1 when the name is not a coordinate
    long index_of(std::string_view name) const;
    bool operator==(const CoordinateChart&) const = default;
};

struct NamedPolynomial {
    std::string name;
    Polynomial poly;
};

class VectorField {
  public:
    VectorField(CoordinateChart chart, std::vector<Polynomial> components);
    static VectorField zero(const CoordinateChart& chart);

    const CoordinateChart& chart() const { return chart_; }
    std::size_t dim() const { return chart_.dim(); }
    const Polynomial& component(std::size_t i) const { return comps_.at(i); }
    const std::vector<Polynomial>& components() const { return comps_; }
    bool is_zero() const;
    bool operator==(const VectorField&) const = default;

  private:
    CoordinateChart chart_;
    std::vector<Polynomial> comps_;
};

// Skew-symmetric (2,0)-tensor field. Only the strict upper triangle is
// stored; the accessor supplies P^{ji} = -P^{ij} and P^{ii} = 0.
class BivectorField {
  public:
    explicit BivectorField(CoordinateChart chart);

    const CoordinateChart& chart() const { return chart_; }
    std::size_t dim() const { return chart_.dim(); }

    // Any index order; result carries the sign of the permutation.
    Polynomial component(std::size_t i, std::size_t j) const;
    // i != j; stores p into the triangle with the sign implied by (i, j).
    void set(std::size_t i, std::size_t j, Polynomial p);
    const Polynomial& upper(std::size_t i, std::size_t j) const; // requires i < j

    bool is_zero() const;
    BivectorField scaled(const Rational& c) const;
    friend BivectorField operator+(const BivectorField& a, const BivectorField& b);
    bool operator==(const BivectorField&) const = default;

  private:
    std::size_t pack(std::size_t i, std::size_t j) const; // i < j
    CoordinateChart chart_;
    std::vector<Polynomial> upper_;
};

// Fully antisymmetric (3,0)-tensor field; components stored for i < j < k.
// On charts of dimension < 3 the component set is empty and the field is
// trivially zero.
class TrivectorField {
  public:
    explicit TrivectorField(CoordinateChart chart);

    const CoordinateChart& chart() const { return chart_; }
    std::size_t dim() const { return chart_.dim(); }
    bool trivially_zero() const { return dim() < 3; }

    Polynomial component(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, Polynomial p); // i < j < k
    const Polynomial& upper(std::size_t i, std::size_t j, std::size_t k) const;

    bool is_zero() const;
    bool operator==(const TrivectorField&) const = default;

    // "i,j,k: <poly>" lines for nonzero components, in index order.
    std::string describe() const;

  private:
    std::size_t pack(std::size_t i, std::size_t j, std::size_t k) const;
    CoordinateChart chart_;
    std::vector<Polynomial> comps_;
};

class SymmetricTensorField {
  public:
    explicit SymmetricTensorField(CoordinateChart chart);

    const CoordinateChart& chart() const { return chart_; }
    std::size_t dim() const { return chart_.dim(); }

    const Polynomial& component(std::size_t i, std::size_t j) const; // any order
    void set(std::size_t i, std::size_t j, Polynomial p);
    bool operator==(const SymmetricTensorField&) const = default;

  private:
    std::size_t pack(std::size_t i, std::size_t j) const; // i <= j
    CoordinateChart chart_;
    std::vector<Polynomial> entries_;
};

// "i,j: <poly>" lines for nonzero components, in index order.
std::string describe(const BivectorField& b);
std::string describe(const VectorField& v);

} // namespace irrev

#endif
