#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "expasym/exactalg/moment_poly.hpp"
#include "expasym/exactalg/poly.hpp"
#include "expasym/exactalg/ratfunc.hpp"

namespace expasym {

/// Real interval; a missing bound is infinite.
struct Interval {
  std::optional<Rat> lower;
  std::optional<Rat> upper;
  bool lower_closed = true;
  bool upper_closed = true;

  bool bounded() const { return lower && upper; }
  bool contains(const Rat& x) const;
  bool interior(const Rat& x) const;
  std::string to_string() const;
};

enum class FamilyId { bernstein, szasz, baskakov, gauss_weierstrass, custom };

/// Descriptor of an operator sequence S_n satisfying
///   (S_n f)'(x) = lambda_n / phi(x) * ((S_n(psi_x f))(x) - mu_{n,1}(x) (S_n f)(x)).
/// Exponential type is the special case lambda_n = n, mu_{n,1} = 0.
/// Construction validates: phi is a nonzero polynomial of degree <= 2 with no
/// zero in the open interval, and lambda_n / n has a finite positive limit.
class OperatorFamily {
 public:
  static OperatorFamily bernstein();
  static OperatorFamily szasz();
  static OperatorFamily baskakov();
  static OperatorFamily gauss_weierstrass();
  /// Bernstein weight with lambda_n = n + 1 and mu_{n,1} = phi'/(2(n+1)); a
  /// purely symbolic family without a direct evaluator.
  static OperatorFamily synthetic();
  /// Accepts "bernstein", "szasz", "baskakov", "gauss_weierstrass", "synthetic".
  static OperatorFamily from_name(std::string_view name);
  static OperatorFamily custom(std::string name, Interval interval, Poly phi, RatFuncN lambda, MomentPoly mu1);

  FamilyId id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  const Interval& interval() const noexcept { return interval_; }
  const Poly& phi() const noexcept { return phi_; }
  const RatFuncN& lambda() const noexcept { return lambda_; }
  const MomentPoly& mu1() const noexcept { return mu1_; }

  /// lambda_n is identically n.
  bool has_unit_index() const;
  bool is_exponential_type() const { return has_unit_index() && mu1_.is_zero(); }
  bool has_evaluator() const { return id_ != FamilyId::custom; }

  /// Canonical text of all symbolic data; equal keys mean equal moments.
  std::string key() const;

 private:
  OperatorFamily(FamilyId id, std::string name, Interval interval, Poly phi, RatFuncN lambda, MomentPoly mu1);
  FamilyId id_;
  std::string name_;
  Interval interval_;
  Poly phi_;
  RatFuncN lambda_;
  MomentPoly mu1_;
};

/// Whether p has a real zero strictly inside the interval (degree <= 2).
bool has_zero_in_open_interval(const Poly& p, const Interval& interval);

}  // namespace expasym
