#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dpe6 {

/// Base class for mathematically meaningful failures (as opposed to misuse).
class math_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inversion or division by an exact zero.
class division_by_zero : public math_error {
 public:
  division_by_zero() : math_error("division by zero") {}
  explicit division_by_zero(const std::string& what) : math_error(what) {}
};

/// A birational map was evaluated on its exceptional locus (a vanishing
/// denominator; the point lies on a blown-down curve).
class singular_point : public math_error {
 public:
  singular_point(std::string where, std::string detail)
      : math_error("singular point in " + where + ": " + detail),
        where_(std::move(where)),
        detail_(std::move(detail)) {}

  const std::string& where() const { return where_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string where_;
  std::string detail_;
};

/// Lattice operation on incompatible basis tags.
class basis_mismatch : public std::logic_error {
 public:
  explicit basis_mismatch(const std::string& what) : std::logic_error(what) {}
};

/// translation_vector() found a nonzero residual off the delta line.
class not_a_translation : public math_error {
 public:
  explicit not_a_translation(const std::string& what) : math_error(what) {}
};

/// Quadrature failed to reach its error target after max refinement.
class nonconvergence : public math_error {
 public:
  using math_error::math_error;
};

/// The moment-to-Jacobi map lost all significand bits at the working
/// precision; carries the per-step digit-loss estimates.
class precision_exhausted : public math_error {
 public:
  precision_exhausted(const std::string& what, std::vector<double> loss_bits)
      : math_error(what), loss_bits_(std::move(loss_bits)) {}

  const std::vector<double>& loss_bits() const { return loss_bits_; }

 private:
  std::vector<double> loss_bits_;
};

/// Bad configuration or arguments (CLI exit code 2).
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dpe6
