#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct gkz_error : std::runtime_error {
  std::string kind;
  gkz_error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

inline Rat rat(const Int& p, const Int& q) { return Rat(p, q); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }
inline long to_long(const Int& n) { return n.convert_to<long>(); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// floor of a rational
inline Int floor_rat(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}
inline Int ceil_rat(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}
// fractional part in [0,1)
inline Rat frac_rat(const Rat& r) { return r - Rat(floor_rat(r)); }

inline IVec ivec(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}
inline QVec qvec_of(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rat dotq(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline IVec sub(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
inline IVec scale(const Int& k, const IVec& a) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return c;
}
inline bool is_zero(const IVec& a) {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}
inline bool is_zero_q(const QVec& a) {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}
inline Int norm_inf(const IVec& a) {
  Int s = 0;
  for (auto& x : a)
    if (abs(x) > s) s = abs(x);
  return s;
}
inline Int norm1(const IVec& a) {
  Int s = 0;
  for (auto& x : a) s += abs(x);
  return s;
}

// lexicographic order on integer vectors (used wherever a deterministic
// enumeration order is required)
inline bool lex_less(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// divide out the gcd of the entries, keeping the sign pattern
inline IVec primitive(IVec v) {
  Int g = 0;
  for (auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// clear denominators of a rational vector, returning a primitive integer vector
inline IVec primitive_of(const QVec& v) {
  Int l = 1;
  for (auto& x : v) l = boost::multiprecision::lcm(l, den(x));
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
  return primitive(std::move(w));
}

}  // namespace gkz
