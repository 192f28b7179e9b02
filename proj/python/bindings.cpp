#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "nselab/config.hpp"
#include "nselab/dns.hpp"
#include "nselab/experiments.hpp"
#include "nselab/families.hpp"
#include "nselab/snapshot.hpp"
#include "nselab/spectral.hpp"
#include "nselab/taylor.hpp"
#include "nselab/verification.hpp"

namespace py = pybind11;
using namespace nselab;

namespace {

/// Opaque holder; keeps pybind11 from treating the variant as a Union.
struct PyFamily {
    SolutionFamily fam;
};

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::array_t<double> scalar_to_numpy(const RealField3& f) {
    const int n = f.grid.n;
    py::array_t<double> out({n, n, n});
    std::copy(f.values.begin(), f.values.end(), out.mutable_data());
    return out;
}

py::array_t<double> vector_to_numpy(const VecField3& u) {
    const int n = u.grid().n;
    py::array_t<double> out({3, n, n, n});
    double* data = out.mutable_data();
    for (int c = 0; c < 3; ++c)
        data = std::copy(u[c].values.begin(), u[c].values.end(), data);
    return out;
}

RealField3 scalar_from_numpy(const DoubleArray& arr) {
    if (arr.ndim() != 3 || arr.shape(0) != arr.shape(1) || arr.shape(1) != arr.shape(2))
        throw std::invalid_argument("expected an (n, n, n) array");
    const Grid3 grid(static_cast<int>(arr.shape(0)));
    RealField3 f(grid);
    std::copy(arr.data(), arr.data() + arr.size(), f.values.begin());
    return f;
}

VecField3 vector_from_numpy(const DoubleArray& arr) {
    if (arr.ndim() != 4 || arr.shape(0) != 3 || arr.shape(1) != arr.shape(2) ||
        arr.shape(2) != arr.shape(3))
        throw std::invalid_argument("expected a (3, n, n, n) array");
    const Grid3 grid(static_cast<int>(arr.shape(1)));
    VecField3 u(grid);
    const double* data = arr.data();
    for (int c = 0; c < 3; ++c) {
        std::copy(data, data + grid.size(), u[c].values.begin());
        data += grid.size();
    }
    return u;
}

py::dict residual_to_dict(const ResidualReport& r) {
    py::dict d;
    d["t"] = r.time;
    d["linf_momentum"] = r.linf_momentum;
    d["linf_momentum_components"] = r.linf_momentum_comp;
    d["linf_divergence"] = r.linf_divergence;
    d["method"] = r.method == ResidualMethod::spectral_grid ? "spectral-grid"
                                                            : "pointwise-closed-form";
    return d;
}

}  // namespace

PYBIND11_MODULE(_nselab, m) {
    m.doc() = "Spectral verification lab for explicit periodic Navier-Stokes solutions";

    py::class_<TimeProfile>(m, "TimeProfile")
        .def_static("zero", &TimeProfile::zero)
        .def_static("quadratic", &TimeProfile::quadratic, py::arg("c"))
        .def_static("rational_blowup", &TimeProfile::rational_blowup, py::arg("c"), py::arg("a"))
        .def_static("polynomial", &TimeProfile::polynomial, py::arg("coeffs"))
        .def("eval",
             [](const TimeProfile& p, double t) {
                 const ProfileValues v = p.eval(t);
                 return py::make_tuple(v.g, v.dg, v.d2g);
             },
             py::arg("t"), "Returns (g, g', g'')")
        .def("integral", &TimeProfile::integral, py::arg("t"))
        .def_property_readonly("blowup_time",
                               [](const TimeProfile& p) { return p.blowup_time(); })
        .def("__repr__", [](const TimeProfile& p) { return "TimeProfile(" + p.describe() + ")"; });

    py::class_<PyFamily>(m, "SolutionFamily")
        .def_property_readonly("name", [](const PyFamily& s) { return family_name(s.fam); })
        .def_property_readonly("nu", [](const PyFamily& s) { return family_viscosity(s.fam); })
        .def_property_readonly("blowup_time",
                               [](const PyFamily& s) { return blowup_time(s.fam); })
        .def("velocity",
             [](const PyFamily& s, const Vec3& x, double t) { return eval_velocity(s.fam, x, t); },
             py::arg("x"), py::arg("t"))
        .def("pressure",
             [](const PyFamily& s, const Vec3& x, double t) { return eval_pressure(s.fam, x, t); },
             py::arg("x"), py::arg("t"))
        .def("velocity_dt",
             [](const PyFamily& s, const Vec3& x, double t) {
                 return eval_velocity_time_derivative(s.fam, x, t);
             },
             py::arg("x"), py::arg("t"))
        .def("velocity_gradient",
             [](const PyFamily& s, const Vec3& x, double t) {
                 return eval_velocity_gradient(s.fam, x, t);
             },
             py::arg("x"), py::arg("t"))
        .def("velocity_laplacian",
             [](const PyFamily& s, const Vec3& x, double t) {
                 return eval_velocity_laplacian(s.fam, x, t);
             },
             py::arg("x"), py::arg("t"))
        .def("pressure_gradient",
             [](const PyFamily& s, const Vec3& x, double t) {
                 return eval_pressure_gradient(s.fam, x, t);
             },
             py::arg("x"), py::arg("t"))
        .def("pressure_linear_coeff",
             [](const PyFamily& s, double t) { return pressure_linear_coeff(s.fam, t); },
             py::arg("t"))
        .def("grid_commensurate",
             [](const PyFamily& s, int n) { return grid_commensurate(s.fam, Grid3(n)); },
             py::arg("n"))
        .def("initial_field",
             [](const PyFamily& s, int n) {
                 return vector_to_numpy(initial_field(s.fam, Grid3(n)));
             },
             py::arg("n"))
        .def("sample_velocity",
             [](const PyFamily& s, int n, double t) {
                 return vector_to_numpy(sample_velocity(s.fam, Grid3(n), t));
             },
             py::arg("n"), py::arg("t"))
        .def("sample_pressure_periodic",
             [](const PyFamily& s, int n, double t) {
                 return scalar_to_numpy(sample_pressure_periodic(s.fam, Grid3(n), t));
             },
             py::arg("n"), py::arg("t"))
        .def("validate",
             [](const PyFamily& s) {
                 const ValidationReport rep = validate_params(s.fam);
                 py::list items;
                 for (const auto& item : rep.items) {
                     py::dict d;
                     d["name"] = item.name;
                     d["residual"] = item.residual;
                     d["tolerance"] = item.tolerance;
                     d["pass"] = item.pass;
                     items.append(d);
                 }
                 return py::make_tuple(rep.passed, items);
             })
        .def("__repr__",
             [](const PyFamily& s) { return "SolutionFamily(" + family_name(s.fam) + ")"; });

    m.def("trig_triple",
          [](double nu, const TimeProfile& profile) {
              return PyFamily{TrigTripleSolution{nu, profile}};
          },
          py::arg("nu") = 0.01, py::arg("profile") = TimeProfile());
    m.def("plane_wave",
          [](const Vec3& b, const Vec3& alpha, double nu, const TimeProfile& g0) {
              return PyFamily{PlaneWaveSolution{b, alpha, nu, g0}};
          },
          py::arg("b"), py::arg("alpha"), py::arg("nu") = 0.01,
          py::arg("g0_profile") = TimeProfile());
    m.def("fourier_series",
          [](const Vec3& b, const Vec3& alpha, const std::vector<std::array<double, 2>>& coeffs,
             double nu) { return PyFamily{FourierSeriesSolution{b, alpha, coeffs, nu}}; },
          py::arg("b"), py::arg("alpha"), py::arg("coeffs"), py::arg("nu") = 0.01);
    m.def("two_wave",
          [](const Vec3& b1, const Vec3& b2, const Vec3& alpha1, const Vec3& alpha2, double nu) {
              return PyFamily{TwoWaveSolution{{b1, b2}, {alpha1, alpha2}, nu}};
          },
          py::arg("b1"), py::arg("b2"), py::arg("alpha1"), py::arg("alpha2"),
          py::arg("nu") = 0.01);
    m.def("canonical_trig_triple",
          [](double nu, const TimeProfile& profile) {
              return PyFamily{canonical_trig_triple(nu, profile)};
          },
          py::arg("nu") = 0.01, py::arg("profile") = TimeProfile());
    m.def("canonical_plane_wave",
          [](double nu, const TimeProfile& g0) { return PyFamily{canonical_plane_wave(nu, g0)}; },
          py::arg("nu") = 0.01, py::arg("g0_profile") = TimeProfile());
    m.def("canonical_fourier_series",
          [](double nu) { return PyFamily{canonical_fourier_series(nu)}; }, py::arg("nu") = 0.01);
    m.def("canonical_two_wave", [](double nu) { return PyFamily{canonical_two_wave(nu)}; },
          py::arg("nu") = 0.01);

    // spectral calculus on numpy fields
    m.def("divergence",
          [](const DoubleArray& u) { return scalar_to_numpy(divergence(vector_from_numpy(u))); },
          py::arg("u"));
    m.def("leray_split", [](const DoubleArray& u) {
        const LeraySplit split = leray_split(vector_from_numpy(u));
        return py::make_tuple(vector_to_numpy(split.solenoidal),
                              vector_to_numpy(split.gradient_part),
                              scalar_to_numpy(split.potential));
    });
    m.def("phase_shift",
          [](const DoubleArray& u, const Vec3& offset) {
              return vector_to_numpy(phase_shift(vector_from_numpy(u), offset));
          },
          py::arg("u"), py::arg("offset"));
    m.def("norms", [](const DoubleArray& arr) {
        if (arr.ndim() == 3) {
            const FieldNorms n = norms(scalar_from_numpy(arr));
            return py::make_tuple(n.linf, n.l2);
        }
        const FieldNorms n = norms(vector_from_numpy(arr));
        return py::make_tuple(n.linf, n.l2);
    });

    m.def("nse_residual",
          [](const PyFamily& s, int n, double t) {
              return residual_to_dict(nse_residual(s.fam, Grid3(n), t));
          },
          py::arg("family"), py::arg("n"), py::arg("t"));
    m.def("nse_residual_points",
          [](const PyFamily& s, const std::vector<Vec3>& points, double t) {
              return residual_to_dict(nse_residual(s.fam, points, t));
          },
          py::arg("family"), py::arg("points"), py::arg("t"));
    m.def("h_equation_residual_linf",
          [](const PyFamily& s, int n, double t) {
              return h_equation_residual(s.fam, Grid3(n), t).linf;
          },
          py::arg("family"), py::arg("n"), py::arg("t"));
    m.def("lemma3_residual_linf",
          [](const DoubleArray& u) { return lemma3_residual_linf(vector_from_numpy(u)); },
          py::arg("u"));
    m.def("feedback_force",
          [](const PyFamily& u_traj, const PyFamily& ref, int n, double t) {
              return vector_to_numpy(feedback_force(u_traj.fam, ref.fam, Grid3(n), t));
          },
          py::arg("u_traj"), py::arg("ref_traj"), py::arg("n"), py::arg("t"));
    m.def("gauge_transform",
          [](const DoubleArray& u, const DoubleArray& p_periodic, const TimeProfile& profile,
             double t) {
              const GaugeSnapshot out = gauge_transform(vector_from_numpy(u),
                                                        scalar_from_numpy(p_periodic), profile, t);
              return py::make_tuple(vector_to_numpy(out.velocity),
                                    scalar_to_numpy(out.pressure.periodic),
                                    out.pressure.linear_coeff);
          },
          py::arg("u"), py::arg("p_periodic"), py::arg("profile"), py::arg("t"));

    py::class_<TaylorSeries>(m, "TaylorSeries")
        .def_property_readonly("order", [](const TaylorSeries& s) { return s.order; })
        .def("coefficient",
             [](const TaylorSeries& s, int n) {
                 if (n < 0 || n >= static_cast<int>(s.psi.size()))
                     throw std::out_of_range("coefficient index");
                 return vector_to_numpy(to_physical(s.psi[n]));
             },
             py::arg("n"))
        .def("pressure_coefficient",
             [](const TaylorSeries& s, int n) {
                 if (n < 0 || n >= static_cast<int>(s.pressure.size()))
                     throw std::out_of_range("pressure coefficient index");
                 return scalar_to_numpy(to_physical(s.pressure[n]));
             },
             py::arg("n"))
        .def("evaluate",
             [](const TaylorSeries& s, double t) { return vector_to_numpy(evaluate(s, t)); },
             py::arg("t"));
    m.def("taylor_coefficients",
          [](const DoubleArray& u0, double nu, int order) {
              return compute_coefficients(to_spectral(vector_from_numpy(u0)), {}, nu, order);
          },
          py::arg("u0"), py::arg("nu"), py::arg("order"));

    py::class_<DnsConfig>(m, "DnsConfig")
        .def(py::init<>())
        .def_readwrite("n", &DnsConfig::n)
        .def_readwrite("nu", &DnsConfig::nu)
        .def_readwrite("dt", &DnsConfig::dt)
        .def_readwrite("t_end", &DnsConfig::t_end)
        .def_readwrite("dealias", &DnsConfig::dealias)
        .def_readwrite("blowup_threshold", &DnsConfig::blowup_threshold)
        .def_property_readonly("stability_limit", &DnsConfig::stability_limit);
    m.def("dns_run",
          [](const DoubleArray& u0, const DnsConfig& cfg, double t_end,
             const std::vector<double>& sample_times) {
              DnsState state = dns_init(vector_from_numpy(u0), cfg);
              const DnsTrajectory traj = dns_integrate(state, cfg, t_end, sample_times);
              py::list snapshots, diagnostics;
              for (const auto& snap : traj.snapshots) snapshots.append(vector_to_numpy(snap));
              for (const auto& row : traj.diagnostics) {
                  py::dict d;
                  d["t"] = row.t;
                  d["energy"] = row.energy;
                  d["max_velocity"] = row.max_velocity;
                  d["div_linf"] = row.div_linf;
                  diagnostics.append(d);
              }
              py::dict out;
              out["sample_times"] = traj.sample_times;
              out["snapshots"] = snapshots;
              out["diagnostics"] = diagnostics;
              out["blowup_flagged"] = traj.blowup_flagged;
              return out;
          },
          py::arg("u0"), py::arg("config"), py::arg("t_end"), py::arg("sample_times"));
    m.def("blowup_monitor",
          [](const PyFamily& s, int n, const std::vector<double>& times, double threshold) {
              const BlowupReport rep = blowup_monitor(s.fam, Grid3(n), times, threshold);
              py::list samples;
              for (const auto& sample : rep.samples) {
                  py::dict d;
                  d["t"] = sample.t;
                  d["sup_velocity"] = sample.sup_velocity;
                  d["sup_components"] = sample.sup_comp;
                  samples.append(d);
              }
              py::dict out;
              out["threshold"] = rep.threshold;
              out["samples"] = samples;
              out["first_exceedance"] =
                  rep.first_exceedance ? py::object(py::float_(*rep.first_exceedance))
                                       : py::object(py::none());
              return out;
          },
          py::arg("family"), py::arg("n"), py::arg("times"), py::arg("threshold"));

    m.def("write_nsef",
          [](const std::string& path, const DoubleArray& u) {
              write_nsef(path, vector_from_numpy(u));
          },
          py::arg("path"), py::arg("u"));
    m.def("read_nsef", [](const std::string& path) { return vector_to_numpy(read_nsef(path)); },
          py::arg("path"));

    // Experiment driver; returns the JSON report as a string.
    m.def("_run_experiment_json",
          [](const std::string& experiment, const std::map<std::string, std::string>& options) {
              const auto kind = parse_experiment(experiment);
              if (!kind) throw ConfigError("unknown experiment '" + experiment + "'");
              std::vector<ConfigEntry> overrides;
              for (const auto& [key, value] : options) overrides.push_back({key, value, 0});
              const ExperimentConfig cfg = build_config(*kind, nullptr, overrides);
              const RunReport report = nselab::run(cfg);
              return report_json(report).dump();
          });

    py::register_exception<ConfigError>(m, "ConfigError");
}
