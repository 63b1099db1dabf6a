#include "fpplab/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fpplab::geom {

namespace {

using rational = boost::multiprecision::cpp_rational;

constexpr double kEps = 0x1.0p-53;  // half an ulp of 1.0
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

template <typename T>
int sign_of_exact(const T& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

int orient2_exact(Point2 a, Point2 b, Point2 c) {
  rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sign_of_exact(det);
}

// Exact translated in-circle determinant; positive iff d inside the
// circumcircle of counterclockwise (a,b,c).
rational in_circle_det_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
  rational adx = rational(a.x) - rational(d.x);
  rational ady = rational(a.y) - rational(d.y);
  rational bdx = rational(b.x) - rational(d.x);
  rational bdy = rational(b.y) - rational(d.y);
  rational cdx = rational(c.x) - rational(d.x);
  rational cdy = rational(c.y) - rational(d.y);
  rational alift = adx * adx + ady * ady;
  rational blift = bdx * bdx + bdy * bdy;
  rational clift = cdx * cdx + cdy * cdy;
  return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
         clift * (adx * bdy - bdx * ady);
}

// Filtered in-circle determinant sign; 2 means "inconclusive, go exact".
int in_circle_filtered(Point2 a, Point2 b, Point2 c, Point2 d) {
  double adx = a.x - d.x, ady = a.y - d.y;
  double bdx = b.x - d.x, bdy = b.y - d.y;
  double cdx = c.x - d.x, cdy = c.y - d.y;

  double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  double cdxady = cdx * ady, adxcdy = adx * cdy;
  double adxbdy = adx * bdy, bdxady = bdx * ady;
  double alift = adx * adx + ady * ady;
  double blift = bdx * bdx + bdy * bdy;
  double clift = cdx * cdx + cdy * cdy;

  double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
               clift * (adxbdy - bdxady);
  double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                     (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                     (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  double errbound = kIccErrBound * permanent;
  if (det > errbound || -det > errbound) return sign_of(det);
  return 2;
}

}  // namespace

int orient2(Point2 a, Point2 b, Point2 c) {
  double detleft = (a.x - c.x) * (b.y - c.y);
  double detright = (a.y - c.y) * (b.x - c.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    // detleft == 0: det is a correctly rounded single product, sign is exact.
    return sign_of(det);
  }
  double errbound = kCcwErrBound * detsum;
  if (det >= errbound || -det >= errbound) return sign_of(det);
  return orient2_exact(a, b, c);
}

int in_circle(Point2 a, Point2 b, Point2 c, Point2 d) {
  int orientation = orient2(a, b, c);
  if (orientation == 0) {
    throw std::invalid_argument("in_circle: (a,b,c) are collinear");
  }
  if (orientation < 0) {
    throw std::invalid_argument("in_circle: (a,b,c) must be counterclockwise");
  }
  int s = in_circle_filtered(a, b, c, d);
  if (s != 2) return s;
  return sign_of_exact(in_circle_det_exact(a, b, c, d));
}

int in_circle_perturbed(Point2 a, int ia, Point2 b, int ib, Point2 c, int ic,
                        Point2 d, int id) {
  int s = in_circle_filtered(a, b, c, d);
  if (s != 2) return s;
  s = sign_of_exact(in_circle_det_exact(a, b, c, d));
  if (s != 0) return s;

  // Cocircular. Expanding the lifted determinant in the perturbations gives
  //   D(delta) = D - da*odet(b,c,d) + db*odet(a,c,d) - dc*odet(a,b,d)
  //                + dd*odet(a,b,c),
  // with odet the counterclockwise orientation determinant. The sign is that
  // of the term belonging to the smallest point index with nonzero
  // coefficient, since delta decays geometrically in the index.
  struct Term {
    int index;
    int coefficient_sign;
  };
  std::array<Term, 4> terms = {{
      {ia, -orient2(b, c, d)},
      {ib, orient2(a, c, d)},
      {ic, -orient2(a, b, d)},
      {id, orient2(a, b, c)},
  }};
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.index < r.index; });
  for (const Term& t : terms) {
    if (t.coefficient_sign != 0) return t.coefficient_sign;
  }
  throw std::invalid_argument("in_circle_perturbed: all four points collinear");
}

int compare_dist2(Point2 p, Point2 q, Point2 r, Point2 s) {
  double dx1 = p.x - q.x, dy1 = p.y - q.y;
  double dx2 = r.x - s.x, dy2 = r.y - s.y;
  double a = dx1 * dx1 + dy1 * dy1;
  double b = dx2 * dx2 + dy2 * dy2;
  double diff = a - b;
  // Each squared distance carries at most ~4 rounding errors; 8 eps of the
  // magnitude sum is a comfortable certificate.
  double errbound = 8.0 * kEps * (a + b);
  if (diff > errbound || -diff > errbound) return sign_of(diff);
  rational ex1 = rational(p.x) - rational(q.x);
  rational ey1 = rational(p.y) - rational(q.y);
  rational ex2 = rational(r.x) - rational(s.x);
  rational ey2 = rational(r.y) - rational(s.y);
  rational d = ex1 * ex1 + ey1 * ey1 - ex2 * ex2 - ey2 * ey2;
  return sign_of_exact(d);
}

}  // namespace fpplab::geom
