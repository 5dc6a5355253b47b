#pragma once

// Exact arbitrary-precision scalars used everywhere in the library.
// All quantities are rationals in lowest terms with positive denominator
// (cpp_rational keeps that canonical form); there is no floating point in
// any computational path.  Doubles appear only in the optional decimal
// previews emitted by the CLI.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgeom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dimension_error : error {
  using error::error;
};
struct degeneracy_error : error {
  using error::error;
};
struct unbounded_error : error {
  using error::error;
};
struct infeasible_error : error {
  using error::error;
};
struct precondition_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// floor(p/q) with the canonical q > 0.
inline Int floor_rat(const Rat& r) {
  Int p = numerator(r), q = denominator(r);
  Int d = p / q;  // truncates toward zero
  if (p % q != 0 && p < 0) --d;
  return d;
}

inline Int ceil_rat(const Rat& r) {
  Int p = numerator(r), q = denominator(r);
  Int d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

// cpp_rational's two-argument constructor rejects negative denominators,
// so all ratio construction goes through this helper.
inline Rat make_rat(Int p, Int q) {
  if (q == 0) throw precondition_error("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rat(p, q);
}

// Serialized form "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

inline Rat parse_rat(std::string_view text) {
  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) throw parse_error("empty integer in rational literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw parse_error("sign without digits in rational literal");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw parse_error("invalid character in rational literal: '" + std::string(t) + "'");
    return Int(std::string(t));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) throw parse_error("zero denominator: '" + std::string(text) + "'");
  return make_rat(std::move(p), std::move(q));
}

// Binomial coefficient C(n, k) for integer n >= 0 and small k.
inline Int binomial(const Int& n, int k) {
  if (k < 0 || n < 0) throw precondition_error("binomial: negative argument");
  if (n < k) return 0;
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

inline Rat rat_pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw precondition_error("rat_pow: zero base with negative exponent");
    return 1 / rat_pow(base, -exponent);
  }
  Rat result = 1;
  Rat b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

inline Int int_pow(Int base, int exponent) {
  Int result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

// Decimal preview; never used in any exact computation.
inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace latgeom
