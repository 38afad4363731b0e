#include "seshadri/exactnum.hpp"

#include <algorithm>
#include <cstdlib>

namespace seshadri {

Ordering compare_rat(const Rat& a, const Rat& b) {
  int c = cmp(a, b);
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;
}

Int isqrt(const Int& a) {
  if (a < 0) throw DomainError("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& a) {
  if (a < 0) return false;
  return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Int floor_root(const Int& a, unsigned long n) {
  if (n == 0) throw DomainError("floor_root: index must be >= 1");
  if (a < 0) throw DomainError("floor_root: negative argument");
  Int r;
  mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

bool exact_nth_root(const Rat& q, unsigned long n, Rat& out) {
  if (n == 0) throw DomainError("exact_nth_root: index must be >= 1");
  if (q < 0) return false;
  if (n == 1) {
    out = q;
    return true;
  }
  Int num_root, den_root;
  int num_exact =
      mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), n);
  if (!num_exact) return false;
  int den_exact =
      mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), n);
  if (!den_exact) return false;
  out = rat(num_root, den_root);
  return true;
}

Ordering compare_root(const Rat& x, const Rat& q, unsigned long n) {
  if (n == 0) throw DomainError("compare_root: index must be >= 1");
  if (q < 0) throw DomainError("compare_root: negative radicand");
  int sx = sgn(x);
  if (q == 0) {
    if (sx > 0) return Ordering::Greater;
    if (sx < 0) return Ordering::Less;
    return Ordering::Equal;
  }
  if (sx <= 0) return Ordering::Less;
  return compare_rat(rat_pow(x, n), q);
}

void sqrt_enclosure(const Rat& t, unsigned digits, Rat& lo, Rat& hi) {
  if (t < 0) throw DomainError("sqrt_enclosure: negative radicand");
  Int scale = int_pow(Int(10), digits);
  Int scaled = (t.get_num() * scale * scale) / t.get_den();
  Int u = isqrt(scaled);
  lo = rat(u, scale);
  hi = rat(u + 1, scale);
  // u^2 <= floor(t*scale^2) and (u+1)^2 > t*scale^2 hold by construction;
  // assert exactly anyway since everything downstream relies on it.
  if (rat_pow(lo, 2) > t || rat_pow(hi, 2) < t)
    throw std::logic_error("sqrt_enclosure: invalid enclosure");
}

PellSolution pell_fundamental(const Int& D) {
  if (D < 2) throw DomainError("pell_fundamental: D must be >= 2");
  Int a0 = isqrt(D);
  if (a0 * a0 == D)
    throw DomainError("pell_fundamental: D is a perfect square");
  // Continued fraction of sqrt(D): the first convergent p/q with
  // p^2 - D q^2 = 1 is the fundamental solution.
  Int m = 0, d = 1, a = a0;
  Int p_prev = 1, p = a0;
  Int q_prev = 0, q = 1;
  while (p * p - D * q * q != 1) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return PellSolution{D, p, q};
}

SeshadriValue SeshadriValue::exact(Rat v, std::string provenance) {
  SeshadriValue s;
  s.kind_ = Kind::Exact;
  s.exact_ = std::move(v);
  s.provenance_ = std::move(provenance);
  return s;
}

namespace {

// Smallest prime factor, for index reduction of root values.
unsigned long smallest_prime_factor(unsigned long n) {
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace

SeshadriValue SeshadriValue::root(Rat radicand, unsigned long index,
                                  std::string provenance) {
  if (index == 0) throw DomainError("root value: index must be >= 1");
  if (radicand < 0) throw DomainError("root value: negative radicand");
  Rat r = std::move(radicand);
  unsigned long n = index;
  // Reduce the index prime by prime while the radicand is a perfect power.
  bool reduced = true;
  while (n > 1 && reduced) {
    reduced = false;
    unsigned long rem = n;
    while (rem > 1) {
      unsigned long p = smallest_prime_factor(rem);
      Rat root_out;
      if (exact_nth_root(r, p, root_out)) {
        r = root_out;
        n /= p;
        reduced = true;
        break;
      }
      while (rem % p == 0) rem /= p;
    }
  }
  if (n == 1) return exact(std::move(r), std::move(provenance));
  SeshadriValue s;
  s.kind_ = Kind::Root;
  s.root_ = RootValue{std::move(r), n};
  s.provenance_ = std::move(provenance);
  return s;
}

SeshadriValue SeshadriValue::interval(SeshadriValue lower, SeshadriValue upper,
                                      std::string provenance) {
  if (!lower.is_point() || !upper.is_point())
    throw DomainError("interval endpoints must be point values");
  Ordering o = compare_values(lower, upper);
  if (o == Ordering::Greater)
    throw InconsistencyError("interval endpoints out of order",
                             {lower.provenance(), upper.provenance()});
  if (o == Ordering::Equal) {
    SeshadriValue v = lower;
    if (!provenance.empty()) v.provenance_ = std::move(provenance);
    return v;
  }
  SeshadriValue s;
  s.kind_ = Kind::Interval;
  s.ends_.push_back(std::move(lower));
  s.ends_.push_back(std::move(upper));
  s.provenance_ = std::move(provenance);
  return s;
}

const Rat& SeshadriValue::exact_value() const {
  if (kind_ != Kind::Exact) throw DomainError("not an exact value");
  return exact_;
}

const RootValue& SeshadriValue::root_value() const {
  if (kind_ != Kind::Root) throw DomainError("not a root value");
  return root_;
}

const SeshadriValue& SeshadriValue::lower() const {
  if (kind_ != Kind::Interval) throw DomainError("not an interval");
  return ends_[0];
}

const SeshadriValue& SeshadriValue::upper() const {
  if (kind_ != Kind::Interval) throw DomainError("not an interval");
  return ends_[1];
}

const SeshadriValue& SeshadriValue::lower_endpoint() const {
  return kind_ == Kind::Interval ? ends_[0] : *this;
}

const SeshadriValue& SeshadriValue::upper_endpoint() const {
  return kind_ == Kind::Interval ? ends_[1] : *this;
}

SeshadriValue SeshadriValue::with_provenance(std::string p) const {
  SeshadriValue v = *this;
  v.provenance_ = std::move(p);
  return v;
}

namespace {

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  Int l = lcm(Int(a), Int(b));
  return l.get_ui();
}

}  // namespace

Ordering compare_values(const SeshadriValue& a, const SeshadriValue& b) {
  if (!a.is_point() || !b.is_point())
    throw DomainError("compare_values: intervals are not totally ordered");
  if (a.is_exact() && b.is_exact())
    return compare_rat(a.exact_value(), b.exact_value());
  if (a.is_exact()) {
    const RootValue& rb = b.root_value();
    return compare_root(a.exact_value(), rb.radicand, rb.index);
  }
  if (b.is_exact()) {
    const RootValue& ra = a.root_value();
    Ordering o = compare_root(b.exact_value(), ra.radicand, ra.index);
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
  }
  const RootValue& ra = a.root_value();
  const RootValue& rb = b.root_value();
  unsigned long l = lcm_ul(ra.index, rb.index);
  return compare_rat(rat_pow(ra.radicand, l / ra.index),
                     rat_pow(rb.radicand, l / rb.index));
}

bool value_eq(const SeshadriValue& a, const SeshadriValue& b) {
  return compare_values(a, b) == Ordering::Equal;
}
bool value_le(const SeshadriValue& a, const SeshadriValue& b) {
  return compare_values(a, b) != Ordering::Greater;
}
bool value_lt(const SeshadriValue& a, const SeshadriValue& b) {
  return compare_values(a, b) == Ordering::Less;
}

SeshadriValue value_min(const SeshadriValue& a, const SeshadriValue& b) {
  if (a.is_point() && b.is_point())
    return value_le(a, b) ? a : b;
  const SeshadriValue& lo = value_le(a.lower_endpoint(), b.lower_endpoint())
                                ? a.lower_endpoint()
                                : b.lower_endpoint();
  const SeshadriValue& hi = value_le(a.upper_endpoint(), b.upper_endpoint())
                                ? a.upper_endpoint()
                                : b.upper_endpoint();
  return SeshadriValue::interval(lo, hi);
}

SeshadriValue value_max(const SeshadriValue& a, const SeshadriValue& b) {
  if (a.is_point() && b.is_point())
    return value_le(a, b) ? b : a;
  const SeshadriValue& lo = value_le(a.lower_endpoint(), b.lower_endpoint())
                                ? b.lower_endpoint()
                                : a.lower_endpoint();
  const SeshadriValue& hi = value_le(a.upper_endpoint(), b.upper_endpoint())
                                ? b.upper_endpoint()
                                : a.upper_endpoint();
  return SeshadriValue::interval(lo, hi);
}

SeshadriValue value_scale(const SeshadriValue& v, const Rat& factor) {
  if (factor < 0) throw DomainError("value_scale: negative factor");
  switch (v.kind()) {
    case SeshadriValue::Kind::Exact:
      return SeshadriValue::exact(v.exact_value() * factor, v.provenance());
    case SeshadriValue::Kind::Root: {
      const RootValue& r = v.root_value();
      // c * q^(1/n) = (c^n * q)^(1/n)
      return SeshadriValue::root(rat_pow(factor, r.index) * r.radicand,
                                 r.index, v.provenance());
    }
    case SeshadriValue::Kind::Interval:
      return SeshadriValue::interval(value_scale(v.lower(), factor),
                                     value_scale(v.upper(), factor),
                                     v.provenance());
  }
  throw std::logic_error("value_scale: bad kind");
}

SeshadriValue value_pow(const SeshadriValue& v, unsigned long e) {
  if (!v.is_point()) throw DomainError("value_pow: point values only");
  if (v.is_exact())
    return SeshadriValue::exact(rat_pow(v.exact_value(), e), v.provenance());
  const RootValue& r = v.root_value();
  return SeshadriValue::root(rat_pow(r.radicand, e), r.index, v.provenance());
}

namespace {

std::string format_scaled(const Int& rounded, unsigned digits, bool negative) {
  std::string s = rounded.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (negative) s.insert(0, "-");
  return s;
}

}  // namespace

std::string decimal_string(const Rat& v, unsigned digits) {
  bool neg = sgn(v) < 0;
  Rat a = neg ? Rat(-v) : v;
  Int scale2 = 2 * int_pow(Int(10), digits);
  Int t = (a.get_num() * scale2) / a.get_den();  // floor(|v| * 2*10^d)
  Int rounded = (t + 1) / 2;                     // round half up
  return format_scaled(rounded, digits, neg);
}

std::string decimal_string(const SeshadriValue& v, unsigned digits) {
  switch (v.kind()) {
    case SeshadriValue::Kind::Exact:
      return decimal_string(v.exact_value(), digits);
    case SeshadriValue::Kind::Root: {
      const RootValue& r = v.root_value();
      Int scale2 = 2 * int_pow(Int(10), digits);
      Int x = (r.radicand.get_num() * int_pow(scale2, r.index)) /
              r.radicand.get_den();
      Int t = floor_root(x, r.index);  // floor(v * 2*10^d)
      Int rounded = (t + 1) / 2;
      return format_scaled(rounded, digits, false);
    }
    case SeshadriValue::Kind::Interval:
      return "[" + decimal_string(v.lower(), digits) + ", " +
             decimal_string(v.upper(), digits) + "]";
  }
  throw std::logic_error("decimal_string: bad kind");
}

Rat rat_from_decimal(const std::string& s) {
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  Int num = 0;
  Int den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw DomainError("rat_from_decimal: malformed literal");
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9')
      throw DomainError("rat_from_decimal: malformed literal");
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
    seen_digit = true;
  }
  if (!seen_digit) throw DomainError("rat_from_decimal: empty literal");
  Rat q = rat(num, den);
  return neg ? Rat(-q) : q;
}

}  // namespace seshadri
