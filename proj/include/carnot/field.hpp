#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>

#include "carnot/dual.hpp"
#include "carnot/errors.hpp"
#include "carnot/group.hpp"

namespace carnot {

enum class DiffMode { analytic, dual_number, central_difference };

/// Scalar field on the group. Fields built from a generic evaluator can be
/// run on dual-number coordinates (exact first/second derivatives); fields
/// may also carry closed-form horizontal gradients and sub-Laplacians,
/// which the calculus layer prefers when the mode allows.
class ScalarField {
 public:
  ScalarField() = default;

  static ScalarField from_plain(std::string name,
                                std::function<double(const Point&)> f) {
    ScalarField field;
    field.name_ = std::move(name);
    field.impl_ = std::make_shared<PlainModel>(std::move(f));
    field.mode_ = DiffMode::central_difference;
    return field;
  }

  /// F must be callable as f(std::span<const S> x, std::span<const S> z) -> S
  /// for S = double, D1 and D2.
  template <typename F>
  static ScalarField from_generic(std::string name, F f) {
    ScalarField field;
    field.name_ = std::move(name);
    field.impl_ = std::make_shared<GenericModel<F>>(std::move(f));
    field.mode_ = DiffMode::dual_number;
    return field;
  }

  ScalarField& with_gradient(std::function<Eigen::VectorXd(const Point&)> g) {
    grad_ = std::move(g);
    mode_ = DiffMode::analytic;
    return *this;
  }

  ScalarField& with_laplacian(std::function<double(const Point&)> lap) {
    laplacian_ = std::move(lap);
    return *this;
  }

  ScalarField& with_mode(DiffMode m) {
    mode_ = m;
    return *this;
  }

  double operator()(const Point& p) const {
    return impl_->ev0({p.x.data(), static_cast<std::size_t>(p.x.size())},
                      {p.z.data(), static_cast<std::size_t>(p.z.size())});
  }
  double eval(std::span<const double> x, std::span<const double> z) const {
    return impl_->ev0(x, z);
  }
  D1 eval(std::span<const D1> x, std::span<const D1> z) const {
    return impl_->ev1(x, z);
  }
  D2 eval(std::span<const D2> x, std::span<const D2> z) const {
    return impl_->ev2(x, z);
  }

  bool has_generic() const { return impl_ && impl_->generic(); }
  bool has_analytic_grad() const { return static_cast<bool>(grad_); }
  bool has_analytic_laplacian() const { return static_cast<bool>(laplacian_); }

  Eigen::VectorXd analytic_grad(const Point& p) const { return grad_(p); }
  double analytic_laplacian(const Point& p) const { return laplacian_(p); }

  const std::string& name() const { return name_; }
  DiffMode mode() const { return mode_; }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual double ev0(std::span<const double>, std::span<const double>) const = 0;
    virtual D1 ev1(std::span<const D1>, std::span<const D1>) const {
      throw CarnotError("NoDualSupport", "field has no generic evaluator");
    }
    virtual D2 ev2(std::span<const D2>, std::span<const D2>) const {
      throw CarnotError("NoDualSupport", "field has no generic evaluator");
    }
    virtual bool generic() const { return false; }
  };

  template <typename F>
  struct GenericModel final : Concept {
    explicit GenericModel(F fn) : f(std::move(fn)) {}
    double ev0(std::span<const double> x, std::span<const double> z) const override {
      return f(x, z);
    }
    D1 ev1(std::span<const D1> x, std::span<const D1> z) const override {
      return f(x, z);
    }
    D2 ev2(std::span<const D2> x, std::span<const D2> z) const override {
      return f(x, z);
    }
    bool generic() const override { return true; }
    F f;
  };

  struct PlainModel final : Concept {
    explicit PlainModel(std::function<double(const Point&)> fn) : f(std::move(fn)) {}
    double ev0(std::span<const double> x, std::span<const double> z) const override {
      Point p;
      p.x = Eigen::Map<const Eigen::VectorXd>(x.data(), x.size());
      p.z = Eigen::Map<const Eigen::VectorXd>(z.data(), z.size());
      return f(p);
    }
    std::function<double(const Point&)> f;
  };

  std::string name_;
  std::shared_ptr<const Concept> impl_;
  std::function<Eigen::VectorXd(const Point&)> grad_;
  std::function<double(const Point&)> laplacian_;
  DiffMode mode_ = DiffMode::central_difference;
};

}  // namespace carnot
