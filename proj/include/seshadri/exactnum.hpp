#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seshadri {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation is invoked outside its mathematical domain.
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when independently cited bounds contradict each other.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(const std::string& msg, std::vector<std::string> cits)
      : std::runtime_error(msg), citations(std::move(cits)) {}
  std::vector<std::string> citations;
};

/// Thrown when a rational expression is evaluated at a pole.
class PoleError : public DomainError {
  using DomainError::DomainError;
};

enum class Ordering { Less, Equal, Greater };

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Ordering compare_rat(const Rat& a, const Rat& b);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

Int isqrt(const Int& a);
bool is_perfect_square(const Int& a);

/// floor(a^(1/n)) for a >= 0, n >= 1.
Int floor_root(const Int& a, unsigned long n);

/// If q >= 0 is a perfect n-th power of a rational, stores the root and
/// returns true.
bool exact_nth_root(const Rat& q, unsigned long n, Rat& out);

/// Ordering of x against q^(1/n) for q >= 0, decided by comparing x^n with q
/// in integer arithmetic. Never touches floating point.
Ordering compare_root(const Rat& x, const Rat& q, unsigned long n);

/// Rational enclosure lo <= sqrt(t) <= hi with hi - lo = 10^-digits,
/// endpoints certified by exact squaring.
void sqrt_enclosure(const Rat& t, unsigned digits, Rat& lo, Rat& hi);

struct PellSolution {
  Int D;
  Int ell0;
  Int k0;
};

/// Fundamental solution of ell^2 - D*k^2 = 1, computed from the continued
/// fraction expansion of sqrt(D). D must be a nonsquare integer >= 2.
PellSolution pell_fundamental(const Int& D);

/// Normalized n-th root of a rational: the radicand is positive and not a
/// perfect p-th power for any prime p dividing the index.
struct RootValue {
  Rat radicand;
  unsigned long index = 2;
};

/// Exact value of a Seshadri constant: a rational, a normalized root of a
/// rational, or a certified closed interval between two such values. Each
/// value carries a provenance tag naming the result that produced it.
class SeshadriValue {
 public:
  enum class Kind { Exact, Root, Interval };

  SeshadriValue() : kind_(Kind::Exact), exact_(0) {}

  static SeshadriValue exact(Rat v, std::string provenance = {});
  /// radicand^(1/index); collapses to Exact when the radicand is a perfect
  /// power. radicand must be >= 0.
  static SeshadriValue root(Rat radicand, unsigned long index,
                            std::string provenance = {});
  /// Closed interval [lower, upper]; endpoints must be point values with
  /// lower <= upper. Collapses to the common point value when equal.
  static SeshadriValue interval(SeshadriValue lower, SeshadriValue upper,
                                std::string provenance = {});

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_root() const { return kind_ == Kind::Root; }
  bool is_interval() const { return kind_ == Kind::Interval; }
  bool is_point() const { return kind_ != Kind::Interval; }

  const Rat& exact_value() const;
  const RootValue& root_value() const;
  const SeshadriValue& lower() const;
  const SeshadriValue& upper() const;

  /// Lower/upper endpoint for any kind; identity on point values.
  const SeshadriValue& lower_endpoint() const;
  const SeshadriValue& upper_endpoint() const;

  const std::string& provenance() const { return provenance_; }
  SeshadriValue with_provenance(std::string p) const;

 private:
  Kind kind_;
  Rat exact_;
  RootValue root_;
  std::vector<SeshadriValue> ends_;
  std::string provenance_;
};

/// Total order on point values (Exact and Root kinds).
Ordering compare_values(const SeshadriValue& a, const SeshadriValue& b);
bool value_eq(const SeshadriValue& a, const SeshadriValue& b);
bool value_le(const SeshadriValue& a, const SeshadriValue& b);
bool value_lt(const SeshadriValue& a, const SeshadriValue& b);

/// Componentwise min/max; point values are treated as degenerate intervals.
SeshadriValue value_min(const SeshadriValue& a, const SeshadriValue& b);
SeshadriValue value_max(const SeshadriValue& a, const SeshadriValue& b);
/// v scaled by a nonnegative rational factor.
SeshadriValue value_scale(const SeshadriValue& v, const Rat& factor);
/// v^e for a point value v.
SeshadriValue value_pow(const SeshadriValue& v, unsigned long e);

/// Decimal rendering by scaled-integer division, rounded half up.
std::string decimal_string(const Rat& v, unsigned digits);
std::string decimal_string(const SeshadriValue& v, unsigned digits);

/// Parses a decimal literal such as "0.3161616162" into an exact rational.
Rat rat_from_decimal(const std::string& s);

}  // namespace seshadri
