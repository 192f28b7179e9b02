#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nselab {

struct ProfileValues {
    double g = 0.0;
    double dg = 0.0;
    double d2g = 0.0;
};

/// The free scalar function g(t) with g(0) = g'(0) = 0 that parameterizes the
/// solution families: identically zero, g = c t^2 / 2, the finite-time
/// blow-up profile g = c t^2 / (2 (a - t)), or a polynomial starting at t^2.
class TimeProfile {
  public:
    struct Zero {};
    struct Quadratic {
        double c = 0.0;
    };
    struct RationalBlowup {
        double c = 0.0;
        double a = 0.0;  // pole; evaluable only for t < a
    };
    struct Polynomial {
        std::vector<double> coeffs;  // coeffs[i] multiplies t^(i+2)
    };

    TimeProfile() : v_(Zero{}) {}

    static TimeProfile zero() { return TimeProfile(Zero{}); }
    static TimeProfile quadratic(double c) { return TimeProfile(Quadratic{c}); }
    static TimeProfile rational_blowup(double c, double a);
    static TimeProfile polynomial(std::vector<double> coeffs);

    /// g, g', g'' at t. Throws std::domain_error at or past the pole.
    ProfileValues eval(double t) const;
    /// Integral of g from 0 to t, in closed form.
    double integral(double t) const;

    std::optional<double> blowup_time() const;
    bool is_zero() const { return std::holds_alternative<Zero>(v_); }
    std::string describe() const;

    const std::variant<Zero, Quadratic, RationalBlowup, Polynomial>& variant() const { return v_; }

  private:
    template <typename T>
    explicit TimeProfile(T v) : v_(std::move(v)) {}

    std::variant<Zero, Quadratic, RationalBlowup, Polynomial> v_;
};

/// Operation-style wrapper returning (g, g', g'').
inline ProfileValues profile_eval(const TimeProfile& p, double t) { return p.eval(t); }

}  // namespace nselab
