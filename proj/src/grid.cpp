#include "nselab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nselab {

Grid3::Grid3(int samples) : n(samples) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("Grid3: n must be even and >= 8");
}

RealField3::RealField3(const Grid3& g, double fill) : grid(g), values(g.size(), fill) {}

RealField3::RealField3(const Grid3& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw std::invalid_argument("RealField3: value count does not match grid");
}

VecField3::VecField3(const Grid3& g) : comp{RealField3(g), RealField3(g), RealField3(g)} {}

VecField3::VecField3(RealField3 c0, RealField3 c1, RealField3 c2)
    : comp{std::move(c0), std::move(c1), std::move(c2)} {
    if (!(comp[0].grid == comp[1].grid && comp[1].grid == comp[2].grid))
        throw std::invalid_argument("VecField3: components must share one grid");
}

FieldNorms norms(const RealField3& f) {
    FieldNorms out;
    double sq = 0.0;
    for (double v : f.values) {
        out.linf = std::max(out.linf, std::abs(v));
        sq += v * v;
    }
    out.l2 = std::sqrt(sq / static_cast<double>(f.values.size()));
    return out;
}

FieldNorms norms(const VecField3& u) {
    FieldNorms out;
    double mean_sq = 0.0;
    for (int c = 0; c < 3; ++c) {
        FieldNorms nc = norms(u[c]);
        out.linf = std::max(out.linf, nc.linf);
        mean_sq += nc.l2 * nc.l2;
    }
    out.l2 = std::sqrt(mean_sq);
    return out;
}

double linf_diff(const RealField3& a, const RealField3& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("linf_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double linf_diff(const VecField3& a, const VecField3& b) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c) m = std::max(m, linf_diff(a[c], b[c]));
    return m;
}

}  // namespace nselab
