#include "arks/grid_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace arks {

double ScalarField::min() const {
    return *std::min_element(values.begin(), values.end());
}

double ScalarField::max() const {
    return *std::max_element(values.begin(), values.end());
}

namespace {

void check_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace

ScalarField laplacian(const ScalarField& f) {
    const Grid& g = f.grid;
    ScalarField out(g);
    const double ihx2 = 1.0 / (g.hx * g.hx);
    const double ihy2 = 1.0 / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double fc = f(i, j);
            double acc = 0.0;
            if (i > 0) acc += (f(i - 1, j) - fc) * ihx2;
            if (i + 1 < g.nx) acc += (f(i + 1, j) - fc) * ihx2;
            if (j > 0) acc += (f(i, j - 1) - fc) * ihy2;
            if (j + 1 < g.ny) acc += (f(i, j + 1) - fc) * ihy2;
            out(i, j) = acc;
        }
    }
    return out;
}

VectorField gradient(const ScalarField& f) {
    const Grid& g = f.grid;
    VectorField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int k = 1; k < g.nx; ++k)
            out.xf(k, j) = (f(k, j) - f(k - 1, j)) / g.hx;
    for (int k = 1; k < g.ny; ++k)
        for (int i = 0; i < g.nx; ++i)
            out.yf(i, k) = (f(i, k) - f(i, k - 1)) / g.hy;
    return out;
}

ScalarField chemotactic_div(const ScalarField& u, const ScalarField& phi,
                            double coeff) {
    check_same_grid(u.grid, phi.grid, "chemotactic_div");
    const Grid& g = u.grid;
    ScalarField out(g);
    // x-faces: face between cells (k-1,j) and (k,j)
    for (int j = 0; j < g.ny; ++j) {
        for (int k = 1; k < g.nx; ++k) {
            const double q = coeff * (phi(k, j) - phi(k - 1, j)) / g.hx;
            const double flux = q * (q > 0.0 ? u(k - 1, j) : u(k, j));
            out(k - 1, j) += flux / g.hx;
            out(k, j) -= flux / g.hx;
        }
    }
    // y-faces: face between cells (i,k-1) and (i,k)
    for (int k = 1; k < g.ny; ++k) {
        for (int i = 0; i < g.nx; ++i) {
            const double q = coeff * (phi(i, k) - phi(i, k - 1)) / g.hy;
            const double flux = q * (q > 0.0 ? u(i, k - 1) : u(i, k));
            out(i, k - 1) += flux / g.hy;
            out(i, k) -= flux / g.hy;
        }
    }
    return out;
}

double integrate(const ScalarField& f) {
    double acc = 0.0;
    for (double v : f.values) acc += v;
    return acc * f.grid.cell_area();
}

double dot(const VectorField& a, const VectorField& b) {
    check_same_grid(a.grid, b.grid, "dot");
    double acc = 0.0;
    for (size_t k = 0; k < a.xcomp.size(); ++k) acc += a.xcomp[k] * b.xcomp[k];
    for (size_t k = 0; k < a.ycomp.size(); ++k) acc += a.ycomp[k] * b.ycomp[k];
    return acc * a.grid.cell_area();
}

double dot(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid, b.grid, "dot");
    double acc = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) acc += a.values[k] * b.values[k];
    return acc * a.grid.cell_area();
}

void axpy(double s, const ScalarField& x, ScalarField& y) {
    check_same_grid(x.grid, y.grid, "axpy");
    for (size_t k = 0; k < y.values.size(); ++k) y.values[k] += s * x.values[k];
}

}  // namespace arks
