// Angular momentum channel labels. Half-integers are stored as doubled
// integers (2j, 2m) so channel keys are exact.
#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace bdflab {

// One partial-wave sector (j, m, eps) of the spherically symmetric Dirac
// problem. kappa = eps*(j+1/2) is an integer; the upper 2-spinor carries
// orbital momentum l_up = j + eps/2 and the lower one l_dn = j - eps/2.
struct AngularChannel {
  int two_j = 1;   // 2j, odd and >= 1
  int two_m = 1;   // 2m, odd, |2m| <= 2j
  int eps = 1;     // sign of kappa, +1 or -1

  AngularChannel() = default;
  AngularChannel(int twoj, int twom, int e) : two_j(twoj), two_m(twom), eps(e) {
    if (two_j < 1 || two_j % 2 == 0)
      throw std::invalid_argument("AngularChannel: 2j must be odd and >= 1");
    if (std::abs(two_m) > two_j || (two_m - two_j) % 2 != 0)
      throw std::invalid_argument("AngularChannel: bad 2m");
    if (eps != 1 && eps != -1)
      throw std::invalid_argument("AngularChannel: eps must be +-1");
  }

  double j() const { return 0.5 * two_j; }
  double m() const { return 0.5 * two_m; }
  int kappa() const { return eps * (two_j + 1) / 2; }
  int l_up() const { return (two_j + eps) / 2; }
  int l_dn() const { return (two_j - eps) / 2; }
  int multiplicity() const { return two_j + 1; }  // 2j+1

  // Channel reached by charge conjugation: (j, -m, -eps).
  AngularChannel conjugate_partner() const {
    return AngularChannel(two_j, -two_m, -eps);
  }
  // Channel reached by I_s: same (j, m), opposite eps.
  AngularChannel is_partner() const {
    return AngularChannel(two_j, two_m, -eps);
  }

  bool operator==(const AngularChannel& o) const {
    return two_j == o.two_j && two_m == o.two_m && eps == o.eps;
  }
  bool operator!=(const AngularChannel& o) const { return !(*this == o); }
  // Lexicographic order (j, eps, m); used to break ties deterministically.
  bool operator<(const AngularChannel& o) const {
    if (two_j != o.two_j) return two_j < o.two_j;
    if (eps != o.eps) return eps < o.eps;
    return two_m < o.two_m;
  }

  std::string label() const {
    return "j" + std::to_string(two_j) + "/2.m" + std::to_string(two_m) +
           "/2." + (eps > 0 ? "p" : "m");
  }
};

}  // namespace bdflab

template <>
struct std::hash<bdflab::AngularChannel> {
  size_t operator()(const bdflab::AngularChannel& c) const noexcept {
    return std::hash<long long>()(((long long)c.two_j << 24) ^
                                  ((long long)(c.two_m + 4096) << 4) ^
                                  (c.eps > 0 ? 1 : 0));
  }
};
