#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <vector>

#include "artinlab/defining_graph.hpp"
#include "artinlab/word.hpp"

namespace artinlab {

/// Exact element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Z[sqrt2, sqrt3]. Arithmetic throws
/// std::overflow_error rather than wrapping.
class QuadInt {
 public:
  constexpr QuadInt() = default;
  constexpr QuadInt(std::int64_t a, std::int64_t b = 0, std::int64_t c = 0, std::int64_t d = 0)
      : a_(a), b_(b), c_(c), d_(d) {}

  /// 2cos(pi/m) for m in {2,3,4,6} and m = infinity (kNoEdge).
  static bool representable(Label m) { return m == kNoEdge || m == 2 || m == 3 || m == 4 || m == 6; }
  static QuadInt two_cos_pi_over(Label m);

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  QuadInt operator-() const { return {-a_, -b_, -c_, -d_}; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  /// Exact sign (-1, 0, 1).
  int sign() const;
  double value() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * std::numbers::sqrt2 +
           static_cast<double>(c_) * std::numbers::sqrt3 + static_cast<double>(d_) * std::sqrt(6.0);
  }

  bool operator==(const QuadInt&) const = default;

 private:
  std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
};

namespace detail {

inline bool near_zero(double x) { return std::abs(x) < 1e-9; }
inline int sign_of(double x) { return near_zero(x) ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const QuadInt& x) { return x.sign(); }
inline bool scalar_equal(double x, double y) { return near_zero(x - y); }
inline bool scalar_equal(const QuadInt& x, const QuadInt& y) { return x == y; }
inline double two_cos(Label m, double) { return m == kNoEdge ? 2.0 : 2.0 * std::cos(std::numbers::pi / m); }
inline QuadInt two_cos(Label m, const QuadInt&) { return QuadInt::two_cos_pi_over(m); }

}  // namespace detail

/// Tits' geometric representation of the Coxeter group W_Gamma: s acts by
/// e_t -> e_t + 2cos(pi/m_st) e_s (t != s), e_s -> -e_s. Scalar is QuadInt (exact) or double.
template <class Scalar>
class ReflectionRepresentation {
 public:
  /// Column-major n x n matrix; column s is the image of the simple root e_s.
  struct Matrix {
    std::size_t n = 0;
    std::vector<Scalar> a;

    const Scalar& at(std::size_t row, std::size_t col) const { return a[col * n + row]; }
    Scalar& at(std::size_t row, std::size_t col) { return a[col * n + row]; }
  };

  explicit ReflectionRepresentation(const DefiningGraph& g) : n_(g.size()), coeff_(n_ * n_) {
    for (Generator s = 0; s < n_; ++s) {
      for (Generator t = 0; t < n_; ++t) {
        if (s != t) coeff_[s * n_ + t] = detail::two_cos(g.label(s, t), Scalar{});
      }
    }
  }

  Matrix identity() const {
    Matrix m{n_, std::vector<Scalar>(n_ * n_)};
    for (std::size_t i = 0; i < n_; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  /// m <- m * sigma_s.
  void multiply_right(Matrix& m, Generator s) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (t == s) continue;
      const Scalar& c = coeff_[s * n_ + t];
      if (c == Scalar{}) continue;
      for (std::size_t row = 0; row < n_; ++row) m.at(row, t) = m.at(row, t) + c * m.at(row, s);
    }
    for (std::size_t row = 0; row < n_; ++row) m.at(row, s) = -m.at(row, s);
  }

  /// Image of a word; s and s^-1 act identically.
  Matrix of(const Word& w) const {
    Matrix m = identity();
    for (Letter l : w) multiply_right(m, l.gen);
    return m;
  }

  /// True iff the root m(e_s) is negative, i.e. s is a right descent of the element m represents.
  bool negative_column(const Matrix& m, Generator s) const {
    int best_sign = 0;
    double best = 0.0;
    for (std::size_t row = 0; row < n_; ++row) {
      const int sg = detail::sign_of(m.at(row, s));
      if (sg == 0) continue;
      double mag = std::abs(value(m.at(row, s)));
      if (best_sign == 0 || mag > best) {
        best_sign = sg;
        best = mag;
      }
    }
    return best_sign < 0;
  }

  bool equal(const Matrix& x, const Matrix& y) const {
    for (std::size_t i = 0; i < x.a.size(); ++i) {
      if (!detail::scalar_equal(x.a[i], y.a[i])) return false;
    }
    return true;
  }

  std::size_t dimension() const { return n_; }

 private:
  static double value(double x) { return x; }
  static double value(const QuadInt& x) { return x.value(); }

  std::size_t n_;
  std::vector<Scalar> coeff_;
};

}  // namespace artinlab
