#pragma once

#include "arks/grid.hpp"

namespace arks {

// Five-point Laplacian with mirrored ghost cells (zero normal flux). Built
// from face fluxes, so the cell sum telescopes to zero exactly.
ScalarField laplacian(const ScalarField& f);

// Face-centered differences; boundary faces hold exact zeros.
VectorField gradient(const ScalarField& f);

// Divergence of the per-face flux coeff * u_upwind * (dphi/dn), where the
// upwind side is selected by the sign of the face velocity coeff*(dphi/dn)
// (positive -> the cell on the negative side of the face donates). The cell
// sum of the result telescopes to zero exactly.
ScalarField chemotactic_div(const ScalarField& u, const ScalarField& phi,
                            double coeff);

// Midpoint quadrature: sum f * hx * hy.
double integrate(const ScalarField& f);

// Face-weighted inner product of two face fields: sum over faces of the
// componentwise product times the cell area. Consistent with the Laplacian:
// dot(gradient(f), gradient(f)) == -integrate(f * laplacian(f)) to rounding.
double dot(const VectorField& a, const VectorField& b);

// Cell-weighted inner product: sum a*b*hx*hy.
double dot(const ScalarField& a, const ScalarField& b);

// In-place axpy: y += s * x.
void axpy(double s, const ScalarField& x, ScalarField& y);

}  // namespace arks
