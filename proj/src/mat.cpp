#include "gck/mat.hpp"

#include <cmath>
#include <stdexcept>

namespace gck {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("non-finite matrix/vector entry");
  }
}

}  // namespace

Vec2::Vec2(double x, double y) : x(x), y(y) {
  require_finite(x);
  require_finite(y);
}

Vec2 operator+(const Vec2& a, const Vec2& b) { return Vec2(a.x + b.x, a.y + b.y); }
Vec2 operator-(const Vec2& a, const Vec2& b) { return Vec2(a.x - b.x, a.y - b.y); }
Vec2 operator*(double s, const Vec2& v) { return Vec2(s * v.x, s * v.y); }

double max_abs(const Vec2& v) { return std::max(std::abs(v.x), std::abs(v.y)); }

double max_abs_diff(const Vec2& a, const Vec2& b) { return max_abs(a - b); }

Mat2::Mat2(double a00, double a01, double a10, double a11)
    : e_{{a00, a01}, {a10, a11}} {
  require_finite(a00);
  require_finite(a01);
  require_finite(a10);
  require_finite(a11);
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2(a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0),
              a(1, 1) + b(1, 1));
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2(a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0),
              a(1, 1) - b(1, 1));
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
              a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
              a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
              a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

Mat2 operator*(double s, const Mat2& a) {
  return Mat2(s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1));
}

Vec2 operator*(const Mat2& a, const Vec2& v) {
  return Vec2(a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y);
}

Mat2 transpose(const Mat2& a) {
  return Mat2(a(0, 0), a(1, 0), a(0, 1), a(1, 1));
}

double det(const Mat2& a) {
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

double max_abs(const Mat2& a) {
  double m = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }

Mat2 symmetrize(const Mat2& a) {
  const double off = 0.5 * (a(0, 1) + a(1, 0));
  return Mat2(a(0, 0), off, off, a(1, 1));
}

std::array<double, 2> sym_eigenvalues(const Mat2& a) {
  const double p = a(0, 0);
  const double r = a(1, 1);
  const double q = 0.5 * (a(0, 1) + a(1, 0));
  const double mean = 0.5 * (p + r);
  const double rad = std::hypot(0.5 * (p - r), q);
  return {mean - rad, mean + rad};
}

std::array<double, 2> singular_values(const Mat2& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double s1 = std::hypot(a + d, b - c);
  const double s2 = std::hypot(a - d, b + c);
  return {0.5 * (s1 + s2), 0.5 * std::abs(s1 - s2)};
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.e_[i][i] = 1.0;
  return m;
}

Mat4 Mat4::from_quadrants(const Mat2& ul, const Mat2& ur, const Mat2& ll,
                          const Mat2& lr) {
  Mat4 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m.e_[r][c] = ul(r, c);
      m.e_[r][c + 2] = ur(r, c);
      m.e_[r + 2][c] = ll(r, c);
      m.e_[r + 2][c + 2] = lr(r, c);
    }
  }
  return m;
}

Mat2 Mat4::quadrant(int br, int bc) const {
  const int r0 = 2 * br, c0 = 2 * bc;
  return Mat2(e_[r0][c0], e_[r0][c0 + 1], e_[r0 + 1][c0], e_[r0 + 1][c0 + 1]);
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat2 q[2][2];
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      q[r][c] = a.quadrant(r, 0) * b.quadrant(0, c) +
                a.quadrant(r, 1) * b.quadrant(1, c);
    }
  }
  return Mat4::from_quadrants(q[0][0], q[0][1], q[1][0], q[1][1]);
}

Mat4 transpose(const Mat4& a) {
  return Mat4::from_quadrants(transpose(a.quadrant(0, 0)),
                              transpose(a.quadrant(1, 0)),
                              transpose(a.quadrant(0, 1)),
                              transpose(a.quadrant(1, 1)));
}

Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (int r = 0; r < 4; ++r) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

Mat2 symplectic_block() { return Mat2(0.0, -1.0, 1.0, 0.0); }

const Mat4& symplectic_form() {
  static const Mat4 j = Mat4::from_quadrants(symplectic_block(), Mat2::zero(),
                                             Mat2::zero(), symplectic_block());
  return j;
}

double symplectic_defect(const Mat4& m) {
  return max_abs_diff(transpose(m) * symplectic_form() * m, symplectic_form());
}

}  // namespace gck
