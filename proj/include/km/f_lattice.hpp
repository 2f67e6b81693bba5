#pragma once

#include <optional>
#include <string>
#include <vector>

#include "km/errors.hpp"
#include "km/numeric.hpp"

// Root lattice of the rank-3 hyperbolic algebra F, realized as 2x2 symmetric
// integer matrices [a b; b c] with the bilinear form (x,y) = 2bb' - ac' - a'c,
// so (x,x) = -2 det(x).  Simple roots:
//   alpha_{-1} = [1 0; 0 -1],  alpha_0 = [-1 -1; -1 0],  alpha_1 = [0 1; 1 0].
// The Weyl group is PGL2(Z) acting by N |-> A N A^T.

namespace km {

template <class S>
struct SymMat2T {
  S a{}, b{}, c{};

  friend bool operator==(const SymMat2T&, const SymMat2T&) = default;

  SymMat2T operator+(const SymMat2T& o) const { return {a + o.a, b + o.b, c + o.c}; }
  SymMat2T operator-(const SymMat2T& o) const { return {a - o.a, b - o.b, c - o.c}; }
  SymMat2T operator-() const { return {-a, -b, -c}; }
  SymMat2T operator*(const S& k) const { return {a * k, b * k, c * k}; }

  bool is_zero() const { return a == S(0) && b == S(0) && c == S(0); }
};

using SymMat2 = SymMat2T<Int>;
// Weight-lattice mode: a, c integral, b allowed in (1/2)Z.  Only the bilinear
// pairing and the coordinate conversion accept these.
using WeightMat2 = SymMat2T<Rational>;

template <class S>
S bilinear(const SymMat2T<S>& x, const SymMat2T<S>& y) {
  return S(2) * x.b * y.b - x.a * y.c - y.a * x.c;
}

template <class S>
S norm2(const SymMat2T<S>& x) {
  return bilinear(x, x);
}

template <class S>
S det2(const SymMat2T<S>& x) {
  return x.a * x.c - x.b * x.b;
}

// Level of a lattice vector: the invariant of the affine subgroup <r_0, r_1>.
inline Int level(const SymMat2& x) { return x.c; }

// Coordinates (n_{-1}, n_0, n_1) in the simple-root basis.
using Coords = Eigen::Matrix<Int, 3, 1>;

inline SymMat2 alpha(int i) {
  switch (i) {
    case -1: return {1, 0, -1};
    case 0: return {-1, -1, 0};
    case 1: return {0, 1, 0};
    default: fail("InputError", "simple root index must be -1, 0 or 1");
  }
}

inline SymMat2 to_matrix(const Coords& n) {
  // n_{-1} alpha_{-1} + n_0 alpha_0 + n_1 alpha_1
  return {n[0] - n[1], n[2] - n[1], -n[0]};
}

inline Coords to_coords(const SymMat2& x) {
  return Coords{-x.c, -x.a - x.c, x.b - x.a - x.c};
}

inline Coords to_coords(const WeightMat2& x) {
  if (!is_integer(x.a) || !is_integer(x.c))
    fail("InputError", "weight-lattice vectors need integral diagonal entries");
  if (!is_integer(x.b - x.a - x.c))
    fail("HalfIntegerCoordinates", "vector lies in the weight lattice but not the root lattice");
  return Coords{static_cast<Int>(numerator(-x.c)), static_cast<Int>(numerator(-x.a - x.c)),
                static_cast<Int>(numerator(x.b - x.a - x.c))};
}

inline Int coord_height(const SymMat2& x) {
  Coords n = to_coords(x);
  return std::abs(n[0]) + std::abs(n[1]) + std::abs(n[2]);
}

// ---------------------------------------------------------------------------
// PGL2(Z) elements

enum class Gen : int { rm1 = -1, r0 = 0, r1 = 1 };

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::rm1: return "r-1";
    case Gen::r0: return "r0";
    case Gen::r1: return "r1";
  }
  return "?";
}

using Mat2i = Eigen::Matrix<Int, 2, 2>;

// An element of PGL2(Z): a 2x2 integer matrix with det = +-1, kept with a
// canonical sign (first nonzero entry in row-major order positive).  Carries
// an optional word in the generators r_{-1}, r_0, r_1; products concatenate
// words when both factors have one.
struct Pgl2 {
  Mat2i m;
  std::optional<std::vector<Gen>> word;

  static Mat2i canonical(Mat2i x) {
    // row-major scan; Eigen default storage is column-major, so spell it out
    Int probe[4] = {x(0, 0), x(0, 1), x(1, 0), x(1, 1)};
    for (Int v : probe) {
      if (v > 0) return x;
      if (v < 0) return -x;
    }
    fail("InputError", "zero matrix is not in PGL2(Z)");
  }

  static Pgl2 from_matrix(const Mat2i& x, std::optional<std::vector<Gen>> w = std::nullopt) {
    Int d = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
    if (d != 1 && d != -1) fail("InputError", "matrix is not unimodular");
    return Pgl2{canonical(x), std::move(w)};
  }

  static const Pgl2& identity() {
    static const Pgl2 e = Pgl2{Mat2i::Identity(), std::vector<Gen>{}};
    return e;
  }

  static const Pgl2& generator(Gen g) {
    static const Pgl2 rm1 =
        Pgl2{canonical((Mat2i() << 0, 1, 1, 0).finished()), std::vector<Gen>{Gen::rm1}};
    static const Pgl2 r0 =
        Pgl2{canonical((Mat2i() << -1, 1, 0, 1).finished()), std::vector<Gen>{Gen::r0}};
    static const Pgl2 r1 =
        Pgl2{canonical((Mat2i() << 1, 0, 0, -1).finished()), std::vector<Gen>{Gen::r1}};
    switch (g) {
      case Gen::rm1: return rm1;
      case Gen::r0: return r0;
      case Gen::r1: return r1;
    }
    fail("InputError", "bad generator");
  }

  // Matrix of the product `this * other`; applied to lattice vectors this
  // means `other` acts first.
  Pgl2 times(const Pgl2& o) const {
    std::optional<std::vector<Gen>> w;
    if (word && o.word) {
      w = *word;
      w->insert(w->end(), o.word->begin(), o.word->end());
    }
    return Pgl2{canonical(m * o.m), std::move(w)};
  }

  Pgl2 inverse() const {
    Mat2i adj;
    adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    std::optional<std::vector<Gen>> w;
    if (word) w = std::vector<Gen>(word->rbegin(), word->rend());  // generators are involutions
    return Pgl2{canonical(adj), std::move(w)};
  }

  bool same_element(const Pgl2& o) const { return m == o.m; }
};

// Word letters apply right-to-left: from_word({r0, r1}) is the element r0*r1,
// which acts on a vector by r1 first.
inline Pgl2 from_word(const std::vector<Gen>& letters) {
  Pgl2 acc = Pgl2::identity();
  for (Gen g : letters) acc = acc.times(Pgl2::generator(g));
  return acc;
}

inline SymMat2 weyl_apply(const Pgl2& g, const SymMat2& x) {
  Mat2i n;
  n << x.a, x.b, x.b, x.c;
  Mat2i r = g.m * n * g.m.transpose();
  return {r(0, 0), r(0, 1), r(1, 1)};
}

// Reflection of N in the hyperplane orthogonal to a norm-2 vector beta.
inline SymMat2 reflect(const SymMat2& beta, const SymMat2& n) {
  if (norm2(beta) != 2) fail("NotRealRoot", "reflections need a norm-2 vector");
  return n - beta * bilinear(n, beta);
}

// The PGL2(Z) element realizing reflect(beta, .): beta * J with J = [0 -1; 1 0].
inline Pgl2 reflection_pgl2(const SymMat2& beta) {
  if (norm2(beta) != 2) fail("NotRealRoot", "reflections need a norm-2 vector");
  Mat2i r;
  r << beta.b, -beta.a, beta.c, -beta.b;
  return Pgl2::from_matrix(r);
}

}  // namespace km
