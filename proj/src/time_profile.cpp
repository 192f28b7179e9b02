#include "nselab/time_profile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nselab {

TimeProfile TimeProfile::rational_blowup(double c, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("rational_blowup: a must be positive");
    return TimeProfile(RationalBlowup{c, a});
}

TimeProfile TimeProfile::polynomial(std::vector<double> coeffs) {
    return TimeProfile(Polynomial{std::move(coeffs)});
}

ProfileValues TimeProfile::eval(double t) const {
    ProfileValues out;
    if (std::holds_alternative<Zero>(v_)) return out;
    if (const auto* q = std::get_if<Quadratic>(&v_)) {
        out.g = 0.5 * q->c * t * t;
        out.dg = q->c * t;
        out.d2g = q->c;
        return out;
    }
    if (const auto* r = std::get_if<RationalBlowup>(&v_)) {
        const double a = r->a;
        if (t >= a) throw std::domain_error("TimeProfile: t is at or past the blow-up time");
        const double d = a - t;
        out.g = 0.5 * r->c * t * t / d;
        out.dg = 0.5 * r->c * (2.0 * a * t - t * t) / (d * d);
        out.d2g = r->c * a * a / (d * d * d);
        return out;
    }
    const auto& coeffs = std::get<Polynomial>(v_).coeffs;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double p = static_cast<double>(i) + 2.0;
        out.g += coeffs[i] * std::pow(t, p);
        out.dg += coeffs[i] * p * std::pow(t, p - 1.0);
        out.d2g += coeffs[i] * p * (p - 1.0) * std::pow(t, p - 2.0);
    }
    return out;
}

double TimeProfile::integral(double t) const {
    if (std::holds_alternative<Zero>(v_)) return 0.0;
    if (const auto* q = std::get_if<Quadratic>(&v_)) return q->c * t * t * t / 6.0;
    if (const auto* r = std::get_if<RationalBlowup>(&v_)) {
        const double a = r->a;
        if (t >= a) throw std::domain_error("TimeProfile: t is at or past the blow-up time");
        // t^2/(a-t) = -(t+a) + a^2/(a-t), integrated term by term
        return 0.5 * r->c * (-0.5 * t * t - a * t + a * a * std::log(a / (a - t)));
    }
    const auto& coeffs = std::get<Polynomial>(v_).coeffs;
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double p = static_cast<double>(i) + 2.0;
        sum += coeffs[i] * std::pow(t, p + 1.0) / (p + 1.0);
    }
    return sum;
}

std::optional<double> TimeProfile::blowup_time() const {
    if (const auto* r = std::get_if<RationalBlowup>(&v_))
        if (r->c != 0.0) return r->a;
    return std::nullopt;
}

std::string TimeProfile::describe() const {
    std::ostringstream os;
    if (std::holds_alternative<Zero>(v_)) {
        os << "zero";
    } else if (const auto* q = std::get_if<Quadratic>(&v_)) {
        os << "quadratic(c=" << q->c << ")";
    } else if (const auto* r = std::get_if<RationalBlowup>(&v_)) {
        os << "rational-blowup(c=" << r->c << ", a=" << r->a << ")";
    } else {
        os << "polynomial(";
        const auto& coeffs = std::get<Polynomial>(v_).coeffs;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            os << (i ? "," : "") << coeffs[i] << "*t^" << (i + 2);
        os << ")";
    }
    return os.str();
}

}  // namespace nselab
