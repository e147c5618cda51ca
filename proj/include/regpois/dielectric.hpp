#pragma once

#include "regpois/vec3.hpp"

namespace regpois {

// Smooth spatially varying permittivity. Implementations must be pure and
// thread-safe: solvers evaluate value() at cell-face midpoints from many
// threads at once.
class DielectricEvaluator {
  public:
    virtual ~DielectricEvaluator() = default;

    virtual double value(Vec3 r) const = 0;

    // Analytic gradient where available; the default is a central finite
    // difference with step gradient_step(), adequate for user-supplied models
    // without closed-form derivatives.
    virtual Vec3 gradient(Vec3 r) const;

    // Step used by the finite-difference fallback. Override to match the
    // model's length scale.
    virtual double gradient_step() const { return 1e-6; }

    // True when the permittivity is constant in a neighborhood of r. Point
    // charges are only admissible in such regions, since the singular part of
    // the potential is removed under a locally uniform permittivity.
    virtual bool locally_uniform(Vec3 r) const { return norm(gradient(r)) == 0.0; }
};

// Diffuse-interface dielectric built from a spherical tanh level set:
//
//   s(|r|) = s_i                                          for |r| <= r_i
//          = (s_e - s_i) * (tanh(k*(rho - 1/2)) + 1)/2 + s_i    on the band
//          = s_e                                          for |r| >= r_e
//
// with rho = (|r| - r_i)/(r_e - r_i), and eps = s*eps_i + (1 - s)*eps_e.
// The clamping is exact, so eps equals the bulk values outside the band and
// the gradient has exact zero support there. Note the clamps leave a small
// discontinuity at r_i and r_e (tanh(+-k/2) != +-1); at k = 6 the level set
// jumps by about 2.47e-3 there. See band_change() for the jump-free integral
// of the radial derivative.
class TanhSphericalDielectric final : public DielectricEvaluator {
  public:
    TanhSphericalDielectric(double r_i, double r_e, double k, double s_i, double s_e,
                            double eps_i, double eps_e);

    double level_set(Vec3 r) const { return level_set_at_radius(norm(r)); }
    double level_set_at_radius(double radius) const;

    double value(Vec3 r) const override { return value_at_radius(norm(r)); }
    double value_at_radius(double radius) const;

    // d(eps)/d|r|: nonzero only on the open band (r_i, r_e), exactly zero at
    // and outside the clamp radii.
    double derivative_at_radius(double radius) const;

    Vec3 gradient(Vec3 r) const override;
    double gradient_step() const override { return 1e-6 * (r_e_ - r_i_); }
    bool locally_uniform(Vec3 r) const override { return norm(r) < r_i_; }

    // Integral of derivative_at_radius over [r0, r1] in closed form, i.e. the
    // change of eps across the interval with the clamp discontinuities
    // excluded. This is what a conservative source discretization needs: the
    // band profile's contribution per cell, independent of where the clamp
    // radii fall relative to cell faces.
    double band_change(double r0, double r1) const;

    double inner_radius() const { return r_i_; }
    double outer_radius() const { return r_e_; }
    double steepness() const { return k_; }
    double interior_eps() const { return eps_i_; }
    double exterior_eps() const { return eps_e_; }

  private:
    double band_level_set(double radius) const; // unclamped formula on [r_i, r_e]

    double r_i_, r_e_, k_, s_i_, s_e_, eps_i_, eps_e_;
};

// Uniform permittivity; handy for operator and solver tests.
class ConstantDielectric final : public DielectricEvaluator {
  public:
    explicit ConstantDielectric(double eps) : eps_(eps) {}
    double value(Vec3) const override { return eps_; }
    Vec3 gradient(Vec3) const override { return {0.0, 0.0, 0.0}; }
    bool locally_uniform(Vec3) const override { return true; }

  private:
    double eps_;
};

} // namespace regpois
