#pragma once

#include <stdexcept>
#include <vector>

namespace arks {

// Uniform cell-centered grid on the axis-aligned rectangle [0,Lx] x [0,Ly].
// Cell (i,j) is centered at ((i+1/2)hx, (j+1/2)hy); storage is row-major
// with x fastest: index(i,j) = j*nx + i.
struct Grid {
    int nx = 0;
    int ny = 0;
    double Lx = 0.0;
    double Ly = 0.0;
    double hx = 0.0;
    double hy = 0.0;

    Grid() = default;
    Grid(int nx_, int ny_, double Lx_, double Ly_)
        : nx(nx_), ny(ny_), Lx(Lx_), Ly(Ly_) {
        if (nx < 4 || ny < 4)
            throw std::invalid_argument("Grid: nx and ny must be >= 4");
        if (Lx <= 0.0 || Ly <= 0.0)
            throw std::invalid_argument("Grid: Lx and Ly must be > 0");
        hx = Lx / nx;
        hy = Ly / ny;
    }

    int cells() const { return nx * ny; }
    int index(int i, int j) const { return j * nx + i; }
    double x(int i) const { return (i + 0.5) * hx; }
    double y(int j) const { return (j + 0.5) * hy; }
    double cell_area() const { return hx * hy; }
    double area() const { return Lx * Ly; }

    bool operator==(const Grid&) const = default;
};

// Scalar field sampled at cell centers.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(static_cast<size_t>(g.cells()), fill) {}

    double& operator()(int i, int j) { return values[grid.index(i, j)]; }
    double operator()(int i, int j) const { return values[grid.index(i, j)]; }

    double min() const;
    double max() const;
};

// Face-centered vector field. x-components live on the (nx+1) x ny vertical
// faces, y-components on the nx x (ny+1) horizontal faces. Boundary faces
// carry zero normal component (homogeneous Neumann).
struct VectorField {
    Grid grid;
    std::vector<double> xcomp;  // size (nx+1)*ny, index k + j*(nx+1)
    std::vector<double> ycomp;  // size nx*(ny+1), index i + k*nx

    VectorField() = default;
    explicit VectorField(const Grid& g)
        : grid(g),
          xcomp(static_cast<size_t>((g.nx + 1) * g.ny), 0.0),
          ycomp(static_cast<size_t>(g.nx * (g.ny + 1)), 0.0) {}

    double& xf(int k, int j) { return xcomp[k + j * (grid.nx + 1)]; }
    double xf(int k, int j) const { return xcomp[k + j * (grid.nx + 1)]; }
    double& yf(int i, int k) { return ycomp[i + k * grid.nx]; }
    double yf(int i, int k) const { return ycomp[i + k * grid.nx]; }
};

}  // namespace arks
