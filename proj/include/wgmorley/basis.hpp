#pragma once

#include <Eigen/Core>

#include "wgmorley/mesh.hpp"

namespace wgm {

using P2Coefficients = Eigen::Matrix<double, 6, 1>;

/// Scaled monomials {1, xi, eta, xi^2, xi*eta, eta^2} with
/// xi = (x - x_c)/h_T, eta = (y - y_c)/h_T.
class P2Basis {
public:
  static constexpr int kSize = 6;
  using Values = Eigen::Matrix<double, 6, 1>;
  using Gradients = Eigen::Matrix<double, 6, 2>;

  P2Basis() = default;
  P2Basis(const Vec2& center, double scale) : center_(center), scale_(scale) {}

  const Vec2& center() const noexcept { return center_; }
  double scale() const noexcept { return scale_; }

  Values values(const Vec2& p) const {
    const double xi = (p.x() - center_.x()) / scale_;
    const double eta = (p.y() - center_.y()) / scale_;
    Values v;
    v << 1.0, xi, eta, xi * xi, xi * eta, eta * eta;
    return v;
  }

  Gradients gradients(const Vec2& p) const {
    const double xi = (p.x() - center_.x()) / scale_;
    const double eta = (p.y() - center_.y()) / scale_;
    const double s = 1.0 / scale_;
    Gradients g;
    g << 0.0, 0.0,
         s, 0.0,
         0.0, s,
         2.0 * xi * s, 0.0,
         eta * s, xi * s,
         0.0, 2.0 * eta * s;
    return g;
  }

  /// Constant Hessian of basis function k.
  Mat2 hessian(int k) const {
    const double s2 = 1.0 / (scale_ * scale_);
    Mat2 h = Mat2::Zero();
    switch (k) {
    case 3: h(0, 0) = 2.0 * s2; break;
    case 4: h(0, 1) = h(1, 0) = s2; break;
    case 5: h(1, 1) = 2.0 * s2; break;
    default: break;
    }
    return h;
  }

  double evaluate(const P2Coefficients& c, const Vec2& p) const { return values(p).dot(c); }
  Vec2 gradient(const P2Coefficients& c, const Vec2& p) const {
    return gradients(p).transpose() * c;
  }
  Mat2 hessian(const P2Coefficients& c) const {
    Mat2 h = Mat2::Zero();
    for (int k = 3; k < kSize; ++k) h += c(k) * hessian(k);
    return h;
  }

private:
  Vec2 center_ = Vec2::Zero();
  double scale_ = 1.0;
};

} // namespace wgm
