#pragma once

#include <array>

namespace gck {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x, double y);  // rejects NaN/Inf
};

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(double s, const Vec2& v);
double max_abs(const Vec2& v);
double max_abs_diff(const Vec2& a, const Vec2& b);

// Dense 2x2 real matrix, immutable value. Construction rejects non-finite
// entries, so downstream arithmetic never sees NaN/Inf.
class Mat2 {
 public:
  Mat2() : e_{{0.0, 0.0}, {0.0, 0.0}} {}
  Mat2(double a00, double a01, double a10, double a11);

  static Mat2 zero() { return Mat2(); }
  static Mat2 identity() { return Mat2(1.0, 0.0, 0.0, 1.0); }
  static Mat2 diag(double d0, double d1) { return Mat2(d0, 0.0, 0.0, d1); }
  static Mat2 pauli_z() { return Mat2(1.0, 0.0, 0.0, -1.0); }

  double operator()(int r, int c) const { return e_[r][c]; }

 private:
  double e_[2][2];
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(double s, const Mat2& a);
Vec2 operator*(const Mat2& a, const Vec2& v);

Mat2 transpose(const Mat2& a);
double det(const Mat2& a);
double max_abs(const Mat2& a);
double max_abs_diff(const Mat2& a, const Mat2& b);
Mat2 symmetrize(const Mat2& a);

// Eigenvalues of (a + a^T)/2, ascending; closed form.
std::array<double, 2> sym_eigenvalues(const Mat2& a);
// Singular values, descending; closed form, stable for 2x2.
std::array<double, 2> singular_values(const Mat2& a);

using Vec4 = std::array<double, 4>;

class Mat4 {
 public:
  Mat4() : e_{} {}

  static Mat4 identity();
  // Assemble from 2x2 quadrants:   | ul  ur |
  //                                | ll  lr |
  static Mat4 from_quadrants(const Mat2& ul, const Mat2& ur, const Mat2& ll,
                             const Mat2& lr);

  double operator()(int r, int c) const { return e_[r][c]; }
  Mat2 quadrant(int br, int bc) const;  // br, bc in {0, 1}

 private:
  double e_[4][4];
};

Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
Vec4 operator*(const Mat4& a, const Vec4& v);
double max_abs_diff(const Mat4& a, const Mat4& b);

// Per-mode symplectic form [[0, -1], [1, 0]]; the two-mode form is its
// block-diagonal doubling. The global sign is a fixed convention, checked
// for self-consistency by the dilation invariants.
Mat2 symplectic_block();
const Mat4& symplectic_form();
// max |M^T J M - J|
double symplectic_defect(const Mat4& m);

}  // namespace gck
