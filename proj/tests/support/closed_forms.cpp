#include "closed_forms.hpp"

#include <stdexcept>

namespace jumpnum::testkit {
namespace {

using R = Rational;

struct Collector {
  Integer bound;
  std::set<R> out;

  void add(const R& x) {
    if (x.sign() > 0 && x <= R(bound)) out.insert(x);
  }
  // x + n for every n in N
  void add_shifts(const R& x) {
    for (Integer n = 0; n <= bound; ++n) add(x + R(n));
  }
  void add_positive_integers() {
    for (Integer n = 1; n <= bound; ++n) add(R(n));
  }
};

}  // namespace

std::set<Rational> example6_closed_form(int j, Integer bound) {
  Collector c{bound, {}};
  // ranges for free naturals: anything beyond these leaves (0, bound]
  const Integer big = 300 * (bound + 1);
  switch (j) {
    case 1:
      for (Integer t : {3, 4, 5, 7, 8, 9, 10})
        for (Integer m : {0, 1, 2}) c.add_shifts(R(t + 10 * m, 31));
      c.add_positive_integers();
      break;
    case 3:
      for (Integer t = 0; t < 8; ++t)
        for (Integer m = 0; R(m) < R(3) - R(t, 4); ++m) c.add_shifts(R(5 + 10 * t + 2 * m, 78));
      c.add_positive_integers();
      break;
    case 7:
      for (Integer t : {46, 89})
        for (Integer p : {0, 1})
          for (Integer m = 0; m < big; ++m) {
            R x(t + 3 * m + 129 * p, 261);
            if (x <= R(1 + p, 2)) c.add_shifts(x);
          }
      c.add_positive_integers();
      break;
    case 8:
      for (Integer t = 0; t < big; ++t) c.add(R(t + 132, 263));
      break;
    case 9:
      for (Integer t = 0; 21 * t <= 164 * bound; ++t)
        for (Integer m = 0; 2 * m <= 164 * bound; ++m)
          if (R(3 - t, 3) <= R(m) && R(m) <= R(4) + R(16 * t, 5)) c.add(R(19 + 21 * t + 2 * m, 164));
      break;
    case 13:
      for (Integer t : {22, 41})
        for (Integer p : {0, 1})
          for (Integer m = 0; m < big; ++m) {
            R x(t + 3 * m + 57 * p, 117);
            if (x <= R(1 + p, 2)) c.add_shifts(x);
          }
      c.add_positive_integers();
      break;
    case 14:
      for (Integer t = 0; t < big; ++t) c.add(R(t + 60, 119));
      break;
    case 16:
      for (Integer t : {11, 33, 55, 66})
        for (Integer m = 1; m <= 6; ++m)
          if (t + 2 * m != 23 && t + 2 * m <= 68) c.add_shifts(R(t + 2 * m, 68));
      break;
    case 19:
      for (Integer t : {71, 142, 210})
        for (Integer m = 0; m < big; ++m) c.add(R(t + 3 * m, 210));
      break;
    case 20:
      for (Integer t = 0; t < big; ++t) c.add(R(t + 12, 34));
      break;
    default:
      throw std::invalid_argument("no closed form for gamma_" + std::to_string(j));
  }
  return c.out;
}

std::set<Rational> simple_ideal_closed_form(Integer a, Integer b, const Rational& bound) {
  std::set<Rational> out;
  for (Integer s = 0; R(s + 1, a) <= bound; ++s)
    for (Integer t = 0;; ++t) {
      R x = R(s + 1, a) + R(t + 1, b);
      if (x > bound) break;
      out.insert(x);
    }
  return out;
}

}  // namespace jumpnum::testkit
