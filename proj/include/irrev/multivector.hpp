#ifndef IRREV_MULTIVECTOR_HPP
#define IRREV_MULTIVECTOR_HPP

#include "irrev/fields.hpp"

namespace irrev {

// Schouten-Nijenhuis bracket of two bivector fields (degree-2/degree-2 case,
// symmetric in its arguments). Component formula, one fixed normalization
// with no 1/2 factor:
//
//   [P,Q]^{ijk} = sum_l ( P^{li} d_l Q^{jk} + Q^{li} d_l P^{jk}
//                       + P^{lj} d_l Q^{ki} + Q^{lj} d_l P^{ki}
//                       + P^{lk} d_l Q^{ij} + Q^{lk} d_l P^{ij} )
//
// [P,P] vanishes exactly when the bracket {f,g} = P(df,dg) satisfies the
// Jacobi identity; only the vanishing locus is contractual, the constant in
// front is a convention.
TrivectorField schouten_bb(const BivectorField& P, const BivectorField& Q);

// Lie derivative of a bivector field along a vector field:
//   (L_X P)^{ij} = sum_l ( X^l d_l P^{ij} - P^{lj} d_l X^i - P^{il} d_l X^j )
// Generates trivial 2-cocycles (coboundaries) for tests.
BivectorField lie_derivative_bivector(const VectorField& X, const BivectorField& P);

// Sharp map: (P# df)^i = sum_j P^{ij} d_j f. A function C is a Casimir of P
// exactly when this vanishes identically.
VectorField sharp(const BivectorField& P, const Polynomial& f);

// {f,g} = sum_{ij} P^{ij} d_i f d_j g
Polynomial poisson_bracket(const BivectorField& P, const Polynomial& f, const Polynomial& g);

// sum_{ij} t^{ij} d_i f d_j g for a symmetric 2-tensor
Polynomial pairing(const SymmetricTensorField& t, const Polynomial& f, const Polynomial& g);

} // namespace irrev

#endif
