#include "simson/geom/primitives.hpp"

#include <algorithm>
#include <cmath>

#include "simson/error.hpp"

namespace simson::geom {

namespace {

void require_same_backend(const Scalar& x, const Scalar& y, const Scalar& z) {
  if (x.backend() != y.backend() || y.backend() != z.backend()) {
    throw Error(Errc::BackendMismatch, "coefficients on different scalar backends");
  }
}

// Scale rational coefficients to coprime integers.
void to_primitive_integers(num::Rational& a, num::Rational& b, num::Rational& c) {
  mpz_class l = 1;
  for (const auto* r : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->den().get_mpz_t());
  mpz_class g = 0;
  for (const auto* r : {&a, &b, &c}) {
    const mpz_class n = r->num() * (l / r->den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  const auto scale = num::Rational::make(l, g);
  a *= scale;
  b *= scale;
  c *= scale;
}

}  // namespace

Line Line::make(const Scalar& a, const Scalar& b, const Scalar& c) {
  require_same_backend(a, b, c);

  if (a.is_exact()) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidLine, "line with zero normal vector");
    num::Rational ra = a.exact(), rb = b.exact(), rc = c.exact();
    to_primitive_integers(ra, rb, rc);
    if ((ra.is_zero() ? rb.sign() : ra.sign()) < 0) {
      ra = -ra;
      rb = -rb;
      rc = -rc;
    }
    return Line(ra, rb, rc);
  }

  const double eps = std::max({a.eps(), b.eps(), c.eps()});
  const double norm = std::hypot(a.to_double(), b.to_double());
  if (norm <= eps) throw Error(Errc::InvalidLine, "line with zero normal vector");
  const Scalar inv = Scalar::approximate(1.0 / norm, eps);
  Scalar na = a * inv, nb = b * inv, nc = c * inv;
  if ((na.is_zero() ? nb.sign() : na.sign()) < 0) {
    na = -na;
    nb = -nb;
    nc = -nc;
  }
  return Line(na, nb, nc);
}

Line Line::restore(const Scalar& a, const Scalar& b, const Scalar& c) {
  if (a.is_exact()) return make(a, b, c);
  require_same_backend(a, b, c);
  if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidLine, "line with zero normal vector");
  return Line(a, b, c);
}

std::string Line::to_string() const {
  return "[" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + "]";
}

Circle Circle::make(const Scalar& d, const Scalar& e, const Scalar& f) {
  require_same_backend(d, e, f);
  const Scalar disc = d * d + e * e - 4 * f;
  if (disc.sign() <= 0) throw Error(Errc::ZeroRadius, "circle with non-positive squared radius");
  return Circle(d, e, f);
}

std::string Circle::to_string() const {
  return "[" + d_.to_string() + ", " + e_.to_string() + ", " + f_.to_string() + "]";
}

}  // namespace simson::geom
