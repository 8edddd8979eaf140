#pragma once

#include "gitstrata/rational.hpp"

#include <string>

namespace gitstrata {

/// Value of the form main + eps * e for a formal infinitesimal e > 0.
/// Ordered lexicographically by (main, eps); the sign is the sign of
/// main unless main vanishes, in which case it is the sign of eps.
struct EpsWeight {
  Rational main;
  Rational eps;

  EpsWeight() = default;
  EpsWeight(Rational m, Rational e) : main(std::move(m)), eps(std::move(e)) {}

  int sign() const { return main.is_zero() ? eps.sign() : main.sign(); }

  EpsWeight operator+(const EpsWeight& o) const { return {main + o.main, eps + o.eps}; }
  EpsWeight operator-(const EpsWeight& o) const { return {main - o.main, eps - o.eps}; }

  bool operator==(const EpsWeight& o) const { return main == o.main && eps == o.eps; }
  bool operator!=(const EpsWeight& o) const { return !(*this == o); }
  bool operator<(const EpsWeight& o) const {
    if (main != o.main) return main < o.main;
    return eps < o.eps;
  }
  bool operator>(const EpsWeight& o) const { return o < *this; }
  bool operator<=(const EpsWeight& o) const { return !(o < *this); }
  bool operator>=(const EpsWeight& o) const { return !(*this < o); }

  std::string to_string() const {
    if (eps.is_zero()) return main.to_string();
    std::string s;
    if (!main.is_zero()) s = main.to_string();
    if (eps.sign() > 0 && !s.empty()) s += '+';
    if (eps == Rational(-1))
      s += '-';
    else if (eps != Rational(1))
      s += eps.to_string();
    s += "eps";
    return s;
  }
};

}  // namespace gitstrata
