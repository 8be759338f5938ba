#include "artinlab/reflection.hpp"

#include <stdexcept>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("QuadInt coefficient overflow");
  return static_cast<std::int64_t>(x);
}

int sgn(Wide x) { return (x > 0) - (x < 0); }

// Sign of x + y*sqrt(k) for k in {2, 3}; |x|, |y| < 2^62.
int sign_root(Wide x, Wide y, int k) {
  const int sx = sgn(x), sy = sgn(y);
  if (sx >= 0 && sy >= 0) return (sx | sy) ? 1 : 0;
  if (sx <= 0 && sy <= 0) return -1;
  const Wide diff = x * x - k * y * y;
  return sx > 0 ? sgn(diff) : -sgn(diff);
}

constexpr std::int64_t kExactSignLimit = std::int64_t{1} << 28;

}  // namespace

QuadInt QuadInt::two_cos_pi_over(Label m) {
  switch (m) {
    case kNoEdge: return QuadInt(2);
    case 2: return QuadInt(0);
    case 3: return QuadInt(1);
    case 4: return QuadInt(0, 1);
    case 6: return QuadInt(0, 0, 1);
    default: throw InputError("2cos(pi/" + std::to_string(m) + ") is not in Z[sqrt2, sqrt3]");
  }
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  return {narrow(Wide(x.a_) + y.a_), narrow(Wide(x.b_) + y.b_), narrow(Wide(x.c_) + y.c_),
          narrow(Wide(x.d_) + y.d_)};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) { return x + (-y); }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  const Wide a1 = x.a_, b1 = x.b_, c1 = x.c_, d1 = x.d_;
  const Wide a2 = y.a_, b2 = y.b_, c2 = y.c_, d2 = y.d_;
  return {narrow(a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2),
          narrow(a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2)),
          narrow(a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2)),
          narrow(a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2)};
}

int QuadInt::sign() const {
  if (is_zero()) return 0;
  auto small = [](std::int64_t v) { return v < kExactSignLimit && v > -kExactSignLimit; };
  if (!(small(a_) && small(b_) && small(c_) && small(d_))) {
    // Far from zero relative to rounding once coefficients are this large; evaluate.
    const long double v = static_cast<long double>(a_) + b_ * std::sqrt(2.0L) + c_ * std::sqrt(3.0L) +
                          d_ * std::sqrt(6.0L);
    return v > 0 ? 1 : -1;
  }
  // x = p + q*sqrt3 with p = a + b*sqrt2, q = c + d*sqrt2.
  const int sp = sign_root(a_, b_, 2);
  const int sq = sign_root(c_, d_, 2);
  if (sp >= 0 && sq >= 0) return (sp | sq) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  // p^2 - 3 q^2 = (a^2 + 2b^2 - 3c^2 - 6d^2) + (2ab - 6cd) sqrt2
  const Wide a = a_, b = b_, c = c_, d = d_;
  const int diff = sign_root(a * a + 2 * b * b - 3 * c * c - 6 * d * d, 2 * a * b - 6 * c * d, 2);
  return sp > 0 ? diff : -diff;
}

}  // namespace artinlab
