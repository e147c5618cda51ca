#include "regpois/dielectric.hpp"

#include <cmath>
#include <stdexcept>

namespace regpois {

Vec3 DielectricEvaluator::gradient(Vec3 r) const {
    const double d = gradient_step();
    const double gx = value({r.x + d, r.y, r.z}) - value({r.x - d, r.y, r.z});
    const double gy = value({r.x, r.y + d, r.z}) - value({r.x, r.y - d, r.z});
    const double gz = value({r.x, r.y, r.z + d}) - value({r.x, r.y, r.z - d});
    return {gx / (2.0 * d), gy / (2.0 * d), gz / (2.0 * d)};
}

TanhSphericalDielectric::TanhSphericalDielectric(double r_i, double r_e, double k, double s_i,
                                                 double s_e, double eps_i, double eps_e)
    : r_i_(r_i), r_e_(r_e), k_(k), s_i_(s_i), s_e_(s_e), eps_i_(eps_i), eps_e_(eps_e) {
    if (!(0.0 < r_i && r_i < r_e))
        throw std::invalid_argument("TanhSphericalDielectric: need 0 < r_i < r_e");
    if (!(k > 0.0))
        throw std::invalid_argument("TanhSphericalDielectric: steepness k must be positive");
    if (!(eps_i > 0.0) || !(eps_e > 0.0))
        throw std::invalid_argument("TanhSphericalDielectric: permittivities must be positive");
}

double TanhSphericalDielectric::band_level_set(double radius) const {
    const double rho = (radius - r_i_) / (r_e_ - r_i_);
    return (s_e_ - s_i_) * (std::tanh(k_ * (rho - 0.5)) + 1.0) / 2.0 + s_i_;
}

double TanhSphericalDielectric::level_set_at_radius(double radius) const {
    if (radius <= r_i_)
        return s_i_;
    if (radius >= r_e_)
        return s_e_;
    return band_level_set(radius);
}

double TanhSphericalDielectric::value_at_radius(double radius) const {
    const double s = level_set_at_radius(radius);
    return s * eps_i_ + (1.0 - s) * eps_e_;
}

double TanhSphericalDielectric::derivative_at_radius(double radius) const {
    if (radius <= r_i_ || radius >= r_e_)
        return 0.0;
    const double width = r_e_ - r_i_;
    const double rho = (radius - r_i_) / width;
    const double sech = 1.0 / std::cosh(k_ * (rho - 0.5));
    const double ds = (s_e_ - s_i_) * k_ * sech * sech / (2.0 * width);
    return (eps_i_ - eps_e_) * ds;
}

Vec3 TanhSphericalDielectric::gradient(Vec3 r) const {
    const double radius = norm(r);
    if (radius <= r_i_ || radius >= r_e_)
        return {0.0, 0.0, 0.0};
    return (derivative_at_radius(radius) / radius) * r;
}

double TanhSphericalDielectric::band_change(double r0, double r1) const {
    const auto clamp_to_band = [this](double r) {
        if (r < r_i_)
            return r_i_;
        if (r > r_e_)
            return r_e_;
        return r;
    };
    const double a = clamp_to_band(r0);
    const double b = clamp_to_band(r1);
    const double ds = band_level_set(b) - band_level_set(a);
    return ds * (eps_i_ - eps_e_);
}

} // namespace regpois
