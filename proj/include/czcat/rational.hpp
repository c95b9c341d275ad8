#ifndef CZCAT_RATIONAL_HPP_
#define CZCAT_RATIONAL_HPP_

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace czcat {

/// Minimal exact rational scalar.  Hom spaces here are at most
/// one-dimensional, so a single scalar per morphism is all the linear
/// algebra the library needs: products and zero tests.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
};

}  // namespace czcat

#endif  // CZCAT_RATIONAL_HPP_
