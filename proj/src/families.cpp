#include "nselab/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nselab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int cyc1(int i) { return (i + 1) % 3; }
int cyc2(int i) { return (i + 2) % 3; }

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// ---- trig triple -----------------------------------------------------------

struct TrigState {
    double E;  // e^{-beta t}
    ProfileValues pv;
};

TrigState trig_state(const TrigTripleSolution& s, double t) {
    return {std::exp(-s.beta() * t), s.profile.eval(t)};
}

Vec3 trig_velocity(const TrigTripleSolution& s, const Vec3& x, double t) {
    const TrigState st = trig_state(s, t);
    Vec3 u;
    for (int i = 0; i < 3; ++i) {
        const double ak = two_pi * (x[cyc1(i)] + st.pv.g);
        const double am = two_pi * (x[cyc2(i)] + st.pv.g);
        u[i] = st.E * two_pi * (std::sin(ak) + std::cos(am)) - st.pv.dg;
    }
    return u;
}

Vec3 trig_velocity_dt(const TrigTripleSolution& s, const Vec3& x, double t) {
    const TrigState st = trig_state(s, t);
    const double beta = s.beta();
    Vec3 du;
    for (int i = 0; i < 3; ++i) {
        const double ak = two_pi * (x[cyc1(i)] + st.pv.g);
        const double am = two_pi * (x[cyc2(i)] + st.pv.g);
        du[i] = -beta * st.E * two_pi * (std::sin(ak) + std::cos(am)) - st.pv.d2g +
                st.pv.dg * st.E * two_pi * two_pi * (std::cos(ak) - std::sin(am));
    }
    return du;
}

Mat3 trig_gradient(const TrigTripleSolution& s, const Vec3& x, double t) {
    const TrigState st = trig_state(s, t);
    Mat3 grad{};
    for (int i = 0; i < 3; ++i) {
        const int k = cyc1(i), m = cyc2(i);
        grad[i][i] = 0.0;
        grad[i][k] = st.E * two_pi * two_pi * std::cos(two_pi * (x[k] + st.pv.g));
        grad[i][m] = -st.E * two_pi * two_pi * std::sin(two_pi * (x[m] + st.pv.g));
    }
    return grad;
}

Vec3 trig_laplacian(const TrigTripleSolution& s, const Vec3& x, double t) {
    const TrigState st = trig_state(s, t);
    Vec3 lap;
    for (int i = 0; i < 3; ++i) {
        const double ak = two_pi * (x[cyc1(i)] + st.pv.g);
        const double am = two_pi * (x[cyc2(i)] + st.pv.g);
        lap[i] = -st.E * two_pi * two_pi * two_pi * (std::sin(ak) + std::cos(am));
    }
    return lap;
}

double trig_pressure_periodic(const TrigTripleSolution& s, const Vec3& x, double t) {
    const TrigState st = trig_state(s, t);
    const double E2 = st.E * st.E;
    double p = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double ai = two_pi * (x[i] + st.pv.g);
        const double ak = two_pi * (x[cyc1(i)] + st.pv.g);
        p -= E2 * two_pi * two_pi * std::sin(ai) * std::cos(ak);
    }
    return p;
}

Vec3 trig_pressure_gradient(const TrigTripleSolution& s, const Vec3& x, double t) {
    const TrigState st = trig_state(s, t);
    const double E2 = st.E * st.E;
    Vec3 gp;
    for (int i = 0; i < 3; ++i) {
        const double ai = two_pi * (x[i] + st.pv.g);
        const double ak = two_pi * (x[cyc1(i)] + st.pv.g);
        const double am = two_pi * (x[cyc2(i)] + st.pv.g);
        gp[i] = -E2 * two_pi * two_pi * two_pi *
                    (std::cos(ai) * std::cos(ak) - std::sin(am) * std::sin(ai)) +
                st.pv.d2g;
    }
    return gp;
}

// ---- plane wave ------------------------------------------------------------

struct WaveState {
    double E;       // e^{beta t}
    double z0;      // g(t), the phase offset
    double g0;      // velocity offset
    double dg0;     // pressure slope
    double phase_rate;  // g'(t) = g0 * sum 1/alpha
};

WaveState wave_state(const PlaneWaveSolution& s, double t) {
    const ProfileValues pv = s.g0_profile.eval(t);
    const double S = s.inv_alpha_sum();
    WaveState st;
    st.E = std::exp(s.beta() * t);
    st.z0 = S * s.g0_profile.integral(t);
    st.g0 = pv.g;
    st.dg0 = pv.dg;
    st.phase_rate = pv.g * S;
    return st;
}

double wave_phase(const PlaneWaveSolution& s, const Vec3& x, const WaveState& st) {
    return dot(x, s.inv_alpha()) + st.z0;
}

Vec3 plane_velocity(const PlaneWaveSolution& s, const Vec3& x, double t) {
    const WaveState st = wave_state(s, t);
    const double sz = std::sin(wave_phase(s, x, st));
    return {s.b[0] * st.E * sz - st.g0, s.b[1] * st.E * sz - st.g0, s.b[2] * st.E * sz - st.g0};
}

Vec3 plane_velocity_dt(const PlaneWaveSolution& s, const Vec3& x, double t) {
    const WaveState st = wave_state(s, t);
    const double z = wave_phase(s, x, st);
    const double beta = s.beta();
    const double core = beta * std::sin(z) + st.phase_rate * std::cos(z);
    return {s.b[0] * st.E * core - st.dg0, s.b[1] * st.E * core - st.dg0,
            s.b[2] * st.E * core - st.dg0};
}

Mat3 plane_gradient(const PlaneWaveSolution& s, const Vec3& x, double t) {
    const WaveState st = wave_state(s, t);
    const double cz = std::cos(wave_phase(s, x, st));
    const Vec3 ia = s.inv_alpha();
    Mat3 grad{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) grad[i][j] = s.b[i] * st.E * cz * ia[j];
    return grad;
}

Vec3 plane_laplacian(const PlaneWaveSolution& s, const Vec3& x, double t) {
    const WaveState st = wave_state(s, t);
    const double sz = std::sin(wave_phase(s, x, st));
    const Vec3 ia = s.inv_alpha();
    const double k2 = dot(ia, ia);
    return {-s.b[0] * st.E * sz * k2, -s.b[1] * st.E * sz * k2, -s.b[2] * st.E * sz * k2};
}

// ---- Fourier series --------------------------------------------------------

struct SeriesTerms {
    double value = 0.0;       // sum e^{beta n^2 t} (c_n sin + d_n cos)
    double slope = 0.0;       // d/dz of value
    double curvature = 0.0;   // d^2/dz^2 of value
    double time_slope = 0.0;  // d/dt of value
};

SeriesTerms series_terms(const FourierSeriesSolution& s, double z, double t) {
    SeriesTerms out;
    const double beta = s.beta();
    for (std::size_t idx = 0; idx < s.coeffs.size(); ++idx) {
        const double n = static_cast<double>(idx + 1);
        const double En = std::exp(beta * n * n * t);
        const double sn = std::sin(n * z), cn = std::cos(n * z);
        const double term = s.coeffs[idx][0] * sn + s.coeffs[idx][1] * cn;
        out.value += En * term;
        out.slope += En * n * (s.coeffs[idx][0] * cn - s.coeffs[idx][1] * sn);
        out.curvature -= En * n * n * term;
        out.time_slope += beta * n * n * En * term;
    }
    return out;
}

Vec3 series_velocity(const FourierSeriesSolution& s, const Vec3& x, double t) {
    const double v = series_terms(s, dot(x, s.inv_alpha()), t).value;
    return {s.b[0] * v, s.b[1] * v, s.b[2] * v};
}

Vec3 series_velocity_dt(const FourierSeriesSolution& s, const Vec3& x, double t) {
    const double v = series_terms(s, dot(x, s.inv_alpha()), t).time_slope;
    return {s.b[0] * v, s.b[1] * v, s.b[2] * v};
}

Mat3 series_gradient(const FourierSeriesSolution& s, const Vec3& x, double t) {
    const double slope = series_terms(s, dot(x, s.inv_alpha()), t).slope;
    const Vec3 ia = s.inv_alpha();
    Mat3 grad{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) grad[i][j] = s.b[i] * slope * ia[j];
    return grad;
}

Vec3 series_laplacian(const FourierSeriesSolution& s, const Vec3& x, double t) {
    const SeriesTerms terms = series_terms(s, dot(x, s.inv_alpha()), t);
    const Vec3 ia = s.inv_alpha();
    const double k2 = dot(ia, ia);
    return {s.b[0] * terms.curvature * k2, s.b[1] * terms.curvature * k2,
            s.b[2] * terms.curvature * k2};
}

// ---- two coupled waves -----------------------------------------------------

struct TwoWaveState {
    std::array<double, 2> E, z;
};

TwoWaveState two_wave_state(const TwoWaveSolution& s, const Vec3& x, double t) {
    TwoWaveState st;
    for (int w = 0; w < 2; ++w) {
        st.E[w] = std::exp(s.beta(w) * t);
        st.z[w] = dot(x, s.inv_alpha(w));
    }
    return st;
}

Vec3 two_wave_velocity(const TwoWaveSolution& s, const Vec3& x, double t) {
    const TwoWaveState st = two_wave_state(s, x, t);
    Vec3 u{};
    for (int w = 0; w < 2; ++w) {
        const double f = st.E[w] * std::sin(st.z[w]);
        for (int i = 0; i < 3; ++i) u[i] += s.b[w][i] * f;
    }
    return u;
}

Vec3 two_wave_velocity_dt(const TwoWaveSolution& s, const Vec3& x, double t) {
    const TwoWaveState st = two_wave_state(s, x, t);
    Vec3 du{};
    for (int w = 0; w < 2; ++w) {
        const double f = s.beta(w) * st.E[w] * std::sin(st.z[w]);
        for (int i = 0; i < 3; ++i) du[i] += s.b[w][i] * f;
    }
    return du;
}

Mat3 two_wave_gradient(const TwoWaveSolution& s, const Vec3& x, double t) {
    const TwoWaveState st = two_wave_state(s, x, t);
    Mat3 grad{};
    for (int w = 0; w < 2; ++w) {
        const double f = st.E[w] * std::cos(st.z[w]);
        const Vec3 ia = s.inv_alpha(w);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) grad[i][j] += s.b[w][i] * f * ia[j];
    }
    return grad;
}

Vec3 two_wave_laplacian(const TwoWaveSolution& s, const Vec3& x, double t) {
    const TwoWaveState st = two_wave_state(s, x, t);
    Vec3 lap{};
    for (int w = 0; w < 2; ++w) {
        const Vec3 ia = s.inv_alpha(w);
        const double f = -st.E[w] * std::sin(st.z[w]) * dot(ia, ia);
        for (int i = 0; i < 3; ++i) lap[i] += s.b[w][i] * f;
    }
    return lap;
}

double two_wave_pressure(const TwoWaveSolution& s, const Vec3& x, double t) {
    const TwoWaveState st = two_wave_state(s, x, t);
    return std::cos(st.z[0]) * std::cos(st.z[1]) * st.E[0] * st.E[1];
}

Vec3 two_wave_pressure_gradient(const TwoWaveSolution& s, const Vec3& x, double t) {
    const TwoWaveState st = two_wave_state(s, x, t);
    const double EE = st.E[0] * st.E[1];
    const Vec3 ia0 = s.inv_alpha(0), ia1 = s.inv_alpha(1);
    Vec3 gp;
    for (int i = 0; i < 3; ++i)
        gp[i] = -EE * (std::sin(st.z[0]) * std::cos(st.z[1]) * ia0[i] +
                       std::cos(st.z[0]) * std::sin(st.z[1]) * ia1[i]);
    return gp;
}

// ---- commensurability ------------------------------------------------------

// Integer wavevector k with inv_alpha = 2*pi*k, if one exists.
std::optional<std::array<int, 3>> integer_wavevector(const Vec3& inv_alpha) {
    std::array<int, 3> k{};
    for (int j = 0; j < 3; ++j) {
        const double kj = inv_alpha[j] / two_pi;
        const double rounded = std::round(kj);
        if (std::abs(kj - rounded) > 1e-9 * std::max(1.0, std::abs(kj))) return std::nullopt;
        k[j] = static_cast<int>(rounded);
    }
    return k;
}

bool wave_fits(const std::array<int, 3>& k, int harmonics, const Grid3& grid) {
    for (int j = 0; j < 3; ++j)
        if (std::abs(k[j]) * harmonics > grid.n / 2 - 1) return false;
    return true;
}

}  // namespace

double TrigTripleSolution::beta() const { return two_pi * two_pi * nu; }

Vec3 PlaneWaveSolution::inv_alpha() const { return {1.0 / alpha[0], 1.0 / alpha[1], 1.0 / alpha[2]}; }

double PlaneWaveSolution::inv_alpha_sum() const {
    const Vec3 ia = inv_alpha();
    return ia[0] + ia[1] + ia[2];
}

double PlaneWaveSolution::beta() const {
    const Vec3 ia = inv_alpha();
    return -nu * dot(ia, ia);
}

Vec3 FourierSeriesSolution::inv_alpha() const {
    return {1.0 / alpha[0], 1.0 / alpha[1], 1.0 / alpha[2]};
}

double FourierSeriesSolution::beta() const {
    const Vec3 ia = inv_alpha();
    return -nu * dot(ia, ia);
}

Vec3 TwoWaveSolution::inv_alpha(int wave) const {
    return {1.0 / alpha[wave][0], 1.0 / alpha[wave][1], 1.0 / alpha[wave][2]};
}

double TwoWaveSolution::beta(int wave) const {
    const Vec3 ia = inv_alpha(wave);
    return -nu * dot(ia, ia);
}

std::string family_name(const SolutionFamily& s) {
    return std::visit(overloaded{[](const TrigTripleSolution&) { return std::string("trig-triple"); },
                                 [](const PlaneWaveSolution&) { return std::string("plane-wave"); },
                                 [](const FourierSeriesSolution&) { return std::string("fourier-series"); },
                                 [](const TwoWaveSolution&) { return std::string("two-wave"); }},
                      s);
}

double family_viscosity(const SolutionFamily& s) {
    return std::visit([](const auto& f) { return f.nu; }, s);
}

Vec3 eval_velocity(const SolutionFamily& s, const Vec3& x, double t) {
    return std::visit(overloaded{[&](const TrigTripleSolution& f) { return trig_velocity(f, x, t); },
                                 [&](const PlaneWaveSolution& f) { return plane_velocity(f, x, t); },
                                 [&](const FourierSeriesSolution& f) { return series_velocity(f, x, t); },
                                 [&](const TwoWaveSolution& f) { return two_wave_velocity(f, x, t); }},
                      s);
}

Vec3 eval_velocity_time_derivative(const SolutionFamily& s, const Vec3& x, double t) {
    return std::visit(
        overloaded{[&](const TrigTripleSolution& f) { return trig_velocity_dt(f, x, t); },
                   [&](const PlaneWaveSolution& f) { return plane_velocity_dt(f, x, t); },
                   [&](const FourierSeriesSolution& f) { return series_velocity_dt(f, x, t); },
                   [&](const TwoWaveSolution& f) { return two_wave_velocity_dt(f, x, t); }},
        s);
}

Mat3 eval_velocity_gradient(const SolutionFamily& s, const Vec3& x, double t) {
    return std::visit(overloaded{[&](const TrigTripleSolution& f) { return trig_gradient(f, x, t); },
                                 [&](const PlaneWaveSolution& f) { return plane_gradient(f, x, t); },
                                 [&](const FourierSeriesSolution& f) { return series_gradient(f, x, t); },
                                 [&](const TwoWaveSolution& f) { return two_wave_gradient(f, x, t); }},
                      s);
}

Vec3 eval_velocity_laplacian(const SolutionFamily& s, const Vec3& x, double t) {
    return std::visit(
        overloaded{[&](const TrigTripleSolution& f) { return trig_laplacian(f, x, t); },
                   [&](const PlaneWaveSolution& f) { return plane_laplacian(f, x, t); },
                   [&](const FourierSeriesSolution& f) { return series_laplacian(f, x, t); },
                   [&](const TwoWaveSolution& f) { return two_wave_laplacian(f, x, t); }},
        s);
}

double pressure_linear_coeff(const SolutionFamily& s, double t) {
    return std::visit(
        overloaded{[&](const TrigTripleSolution& f) { return f.profile.eval(t).d2g; },
                   [&](const PlaneWaveSolution& f) { return f.g0_profile.eval(t).dg; },
                   [&](const FourierSeriesSolution&) { return 0.0; },
                   [&](const TwoWaveSolution&) { return 0.0; }},
        s);
}

double eval_pressure_periodic(const SolutionFamily& s, const Vec3& x, double t) {
    return std::visit(
        overloaded{[&](const TrigTripleSolution& f) { return trig_pressure_periodic(f, x, t); },
                   [&](const PlaneWaveSolution&) { return 0.0; },
                   [&](const FourierSeriesSolution&) { return 0.0; },
                   [&](const TwoWaveSolution& f) { return two_wave_pressure(f, x, t); }},
        s);
}

double eval_pressure(const SolutionFamily& s, const Vec3& x, double t) {
    return eval_pressure_periodic(s, x, t) +
           pressure_linear_coeff(s, t) * (x[0] + x[1] + x[2]);
}

Vec3 eval_pressure_gradient(const SolutionFamily& s, const Vec3& x, double t) {
    return std::visit(
        overloaded{[&](const TrigTripleSolution& f) { return trig_pressure_gradient(f, x, t); },
                   [&](const PlaneWaveSolution& f) {
                       const double dg0 = f.g0_profile.eval(t).dg;
                       return Vec3{dg0, dg0, dg0};
                   },
                   [&](const FourierSeriesSolution&) { return Vec3{0.0, 0.0, 0.0}; },
                   [&](const TwoWaveSolution& f) { return two_wave_pressure_gradient(f, x, t); }},
        s);
}

std::optional<double> blowup_time(const SolutionFamily& s) {
    return std::visit(
        overloaded{[](const TrigTripleSolution& f) { return f.profile.blowup_time(); },
                   [](const PlaneWaveSolution& f) { return f.g0_profile.blowup_time(); },
                   [](const FourierSeriesSolution&) { return std::optional<double>{}; },
                   [](const TwoWaveSolution&) { return std::optional<double>{}; }},
        s);
}

namespace {

void push_item(ValidationReport& rep, std::string name, double residual, double tolerance) {
    const bool pass = std::abs(residual) <= tolerance;
    rep.items.push_back({std::move(name), std::abs(residual), tolerance, pass});
    rep.passed = rep.passed && pass;
}

void push_flag(ValidationReport& rep, std::string name, bool ok) {
    rep.items.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, ok});
    rep.passed = rep.passed && ok;
}

}  // namespace

ValidationReport validate_params(const SolutionFamily& s) {
    ValidationReport rep;
    std::visit(
        overloaded{
            [&](const TrigTripleSolution& f) { push_flag(rep, "nu > 0", f.nu > 0.0); },
            [&](const PlaneWaveSolution& f) {
                push_flag(rep, "nu > 0", f.nu > 0.0);
                push_flag(rep, "alpha nonzero",
                          f.alpha[0] != 0.0 && f.alpha[1] != 0.0 && f.alpha[2] != 0.0);
                if (rep.passed) {
                    push_item(rep, "sum b_j/alpha_j = 0", dot(f.b, f.inv_alpha()), 1e-12);
                    const Vec3 ia = f.inv_alpha();
                    const double scale = std::max({std::abs(ia[0]), std::abs(ia[1]), std::abs(ia[2])});
                    if (std::abs(f.inv_alpha_sum()) <= 1e-12 * std::max(1.0, scale))
                        push_flag(rep, "g0 = 0 when sum 1/alpha_j = 0", f.g0_profile.is_zero());
                }
            },
            [&](const FourierSeriesSolution& f) {
                push_flag(rep, "nu > 0", f.nu > 0.0);
                push_flag(rep, "alpha nonzero",
                          f.alpha[0] != 0.0 && f.alpha[1] != 0.0 && f.alpha[2] != 0.0);
                push_flag(rep, "N >= 1", !f.coeffs.empty());
                if (rep.passed) push_item(rep, "sum b_j/alpha_j = 0", dot(f.b, f.inv_alpha()), 1e-12);
            },
            [&](const TwoWaveSolution& f) {
                push_flag(rep, "nu > 0", f.nu > 0.0);
                bool alpha_ok = true;
                for (int w = 0; w < 2; ++w)
                    for (int j = 0; j < 3; ++j) alpha_ok = alpha_ok && f.alpha[w][j] != 0.0;
                push_flag(rep, "alpha nonzero", alpha_ok);
                if (!rep.passed) return;
                const Vec3 ia0 = f.inv_alpha(0), ia1 = f.inv_alpha(1);
                const double tol = 1e-10;
                push_item(rep, "sum b_j1/alpha_j1 = 0", dot(f.b[0], ia0), tol);
                push_item(rep, "sum b_j2/alpha_j2 = 0", dot(f.b[1], ia1), tol);
                const double c1 = dot(f.b[1], ia0);  // sum_j b_j2 / alpha_j1
                const double c2 = dot(f.b[0], ia1);  // sum_j b_j1 / alpha_j2
                for (int i = 0; i < 3; ++i) {
                    push_item(rep, "b_" + std::to_string(i + 1) + "1 coupling",
                              f.b[0][i] * c1 - ia1[i], tol);
                    push_item(rep, "b_" + std::to_string(i + 1) + "2 coupling",
                              f.b[1][i] * c2 - ia0[i], tol);
                }
                // Implied identities: orthogonal wavevectors and equal decay rates.
                push_item(rep, "sum 1/(alpha_j1 alpha_j2) = 0", dot(ia0, ia1), tol);
                push_item(rep, "sum 1/alpha_j1^2 = sum 1/alpha_j2^2",
                          dot(ia0, ia0) - dot(ia1, ia1), tol);
            }},
        s);
    return rep;
}

bool grid_commensurate(const SolutionFamily& s, const Grid3& grid) {
    return std::visit(
        overloaded{[&](const TrigTripleSolution&) { return grid.n >= 8; },
                   [&](const PlaneWaveSolution& f) {
                       auto k = integer_wavevector(f.inv_alpha());
                       return k.has_value() && wave_fits(*k, 1, grid);
                   },
                   [&](const FourierSeriesSolution& f) {
                       auto k = integer_wavevector(f.inv_alpha());
                       return k.has_value() && wave_fits(*k, static_cast<int>(f.coeffs.size()), grid);
                   },
                   [&](const TwoWaveSolution& f) {
                       auto k0 = integer_wavevector(f.inv_alpha(0));
                       auto k1 = integer_wavevector(f.inv_alpha(1));
                       return k0.has_value() && k1.has_value() && wave_fits(*k0, 1, grid) &&
                              wave_fits(*k1, 1, grid);
                   }},
        s);
}

VecField3 sample_velocity(const SolutionFamily& s, const Grid3& grid, double t) {
    return sample_vector(grid, [&](const Vec3& x) { return eval_velocity(s, x, t); });
}

VecField3 sample_velocity_time_derivative(const SolutionFamily& s, const Grid3& grid, double t) {
    return sample_vector(grid, [&](const Vec3& x) { return eval_velocity_time_derivative(s, x, t); });
}

VecField3 sample_pressure_gradient(const SolutionFamily& s, const Grid3& grid, double t) {
    return sample_vector(grid, [&](const Vec3& x) { return eval_pressure_gradient(s, x, t); });
}

RealField3 sample_pressure_periodic(const SolutionFamily& s, const Grid3& grid, double t) {
    return sample_scalar(grid, [&](const Vec3& x) { return eval_pressure_periodic(s, x, t); });
}

VecField3 initial_field(const SolutionFamily& s, const Grid3& grid) {
    if (!grid_commensurate(s, grid))
        throw std::invalid_argument("initial_field: family parameters are not grid-commensurate");
    return sample_velocity(s, grid, 0.0);
}

TrigTripleSolution canonical_trig_triple(double nu, TimeProfile profile) {
    return TrigTripleSolution{nu, std::move(profile)};
}

PlaneWaveSolution canonical_plane_wave(double nu, TimeProfile g0_profile) {
    PlaneWaveSolution s;
    s.b = {1.0, 1.0, -2.0};
    s.alpha = {1.0 / two_pi, 1.0 / two_pi, 1.0 / two_pi};
    s.nu = nu;
    s.g0_profile = std::move(g0_profile);
    return s;
}

FourierSeriesSolution canonical_fourier_series(double nu) {
    FourierSeriesSolution s;
    s.b = {1.0, 1.0, -2.0};
    s.alpha = {1.0 / two_pi, 1.0 / two_pi, 1.0 / two_pi};
    s.coeffs = {{1.0, 0.5}, {-0.5, 0.25}, {0.25, -0.125}};
    s.nu = nu;
    return s;
}

TwoWaveSolution canonical_two_wave(double nu) {
    TwoWaveSolution s;
    const std::array<Vec3, 2> k = {Vec3{1.0, 2.0, 2.0}, Vec3{2.0, 1.0, -2.0}};
    for (int w = 0; w < 2; ++w)
        for (int j = 0; j < 3; ++j) s.alpha[w][j] = 1.0 / (two_pi * k[w][j]);
    for (int j = 0; j < 3; ++j) {
        s.b[0][j] = k[1][j] / 3.0;
        s.b[1][j] = k[0][j] / 3.0;
    }
    s.nu = nu;
    return s;
}

}  // namespace nselab
