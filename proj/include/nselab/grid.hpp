#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace nselab {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;  // [i][j] = d u_i / d x_j when used as a Jacobian

/// Uniform periodic grid on the unit cube, n samples per axis at x = m/n.
struct Grid3 {
    int n = 0;

    Grid3() = default;
    explicit Grid3(int samples);

    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
    double coord(int m) const { return static_cast<double>(m) / n; }
    std::size_t index(int i1, int i2, int i3) const {
        return (static_cast<std::size_t>(i1) * n + i2) * n + i3;
    }
    Vec3 point(int i1, int i2, int i3) const { return {coord(i1), coord(i2), coord(i3)}; }

    bool operator==(const Grid3&) const = default;
};

/// Scalar samples on a Grid3, row-major over (x1, x2, x3).
struct RealField3 {
    Grid3 grid;
    std::vector<double> values;

    RealField3() = default;
    explicit RealField3(const Grid3& g, double fill = 0.0);
    RealField3(const Grid3& g, std::vector<double> v);

    double& operator()(int i1, int i2, int i3) { return values[grid.index(i1, i2, i3)]; }
    double operator()(int i1, int i2, int i3) const { return values[grid.index(i1, i2, i3)]; }
};

/// Three scalar components sharing one grid.
struct VecField3 {
    std::array<RealField3, 3> comp;

    VecField3() = default;
    explicit VecField3(const Grid3& g);
    VecField3(RealField3 c0, RealField3 c1, RealField3 c2);

    const Grid3& grid() const { return comp[0].grid; }
    RealField3& operator[](int i) { return comp[i]; }
    const RealField3& operator[](int i) const { return comp[i]; }
};

struct FieldNorms {
    double linf = 0.0;
    double l2 = 0.0;  // sqrt(mean of squares) over the unit cube
};

FieldNorms norms(const RealField3& f);
FieldNorms norms(const VecField3& u);

double linf_diff(const RealField3& a, const RealField3& b);
double linf_diff(const VecField3& a, const VecField3& b);

/// Sample a scalar callable f(x) at every grid point.
template <typename F>
RealField3 sample_scalar(const Grid3& g, F&& f) {
    RealField3 out(g);
    for (int i1 = 0; i1 < g.n; ++i1)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i3 = 0; i3 < g.n; ++i3)
                out(i1, i2, i3) = f(g.point(i1, i2, i3));
    return out;
}

/// Sample a vector callable f(x) -> Vec3 at every grid point.
template <typename F>
VecField3 sample_vector(const Grid3& g, F&& f) {
    VecField3 out(g);
    for (int i1 = 0; i1 < g.n; ++i1)
        for (int i2 = 0; i2 < g.n; ++i2)
            for (int i3 = 0; i3 < g.n; ++i3) {
                Vec3 v = f(g.point(i1, i2, i3));
                for (int c = 0; c < 3; ++c) out[c](i1, i2, i3) = v[c];
            }
    return out;
}

}  // namespace nselab
