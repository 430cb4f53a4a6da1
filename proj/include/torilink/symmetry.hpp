#ifndef TORILINK_SYMMETRY_HPP
#define TORILINK_SYMMETRY_HPP

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace torilink {

// Permutation of {0..4}; img[i] is the image of i.
struct Perm5 {
    std::array<int, 5> img{0, 1, 2, 3, 4};

    static Perm5 identity() { return {}; }
    // (a*b)(i) = a(b(i)).
    Perm5 operator*(const Perm5& o) const;
    Perm5 inverse() const;
    auto operator<=>(const Perm5&) const = default;
};

// The order-20 index group generated by the 5-cycle i -> i+1 and the
// 4-cycle i -> 2i (mod 5).
std::vector<Perm5> group_H();

// Signed coordinate permutation of R^5 acting by x -> y with
// y[i] = sign[i] * x[perm[i]].
struct SignedPerm5 {
    Perm5 perm;
    std::array<int, 5> sign{1, 1, 1, 1, 1};

    SignedPerm5 operator*(const SignedPerm5& o) const;
    auto operator<=>(const SignedPerm5&) const = default;
};

// All 640 signed permutations with index part in H: the symmetry group of
// the five-torus link.
std::vector<SignedPerm5> group_G();

struct OrbitReport {
    bool transitive = false;
    std::vector<int> orbit_sizes;  // descending
};

// Orbits of the k-element subsets of {0..4} under the permutation group.
OrbitReport transitivity_on_subsets(const std::vector<Perm5>& group, int k);

// Signed coordinate permutation of R^4; the fourth coordinate carries the
// parity of the S_3 part.
struct SignedPerm4 {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> sign{1, 1, 1, 1};

    SignedPerm4 operator*(const SignedPerm4& o) const;
    auto operator<=>(const SignedPerm4&) const = default;
};

// The 48 symmetries (x1,x2,x3,x4) -> (+-x_s(1), +-x_s(2), +-x_s(3),
// sgn(s) x_4) of the Borromean rings, s running over S_3.
std::vector<SignedPerm4> borromean_symmetries();

// Element of Q(sqrt 2), kept as a + b*sqrt(2) with exact rationals.
struct Q2 {
    mpq_class a, b;

    Q2() = default;
    Q2(const mpq_class& ra) : a(ra) {}
    Q2(const mpq_class& ra, const mpq_class& rb) : a(ra), b(rb) {}
    static Q2 sqrt2() { return Q2(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }
    Q2 operator+(const Q2& o) const { return Q2(a + o.a, b + o.b); }
    Q2 operator-(const Q2& o) const { return Q2(a - o.a, b - o.b); }
    Q2 operator-() const { return Q2(-a, -b); }
    Q2 operator*(const Q2& o) const;
    Q2 inverse() const;  // throws on zero
    Q2 operator/(const Q2& o) const { return *this * o.inverse(); }
    bool operator==(const Q2& o) const = default;
    // -1, 0 or +1; exact.
    int sign() const;
    std::string str() const;
};

using Point5 = std::array<Q2, 5>;

// Coefficient of x_k^2 in the i-th quadric equation: +1 at offsets 1 and 4
// from i, -1 at offsets 2 and 3, 0 at i itself (indices mod 5, 0-based).
int quadric_coefficient(int i, int k);

// Exact value of the i-th quadric's quadratic form at x.
Q2 quadric_form(int i, const Point5& x);
// Sum of squares minus one.
Q2 sphere_form(const Point5& x);

// All points of Q_i and Q_j and the unit sphere (i != j), solved exactly;
// every returned point satisfies all five defining equations.
std::vector<Point5> quadric_intersection(int i, int j);

struct CriticalPoint {
    Point5 x;
    int morse_index = -1;   // of the height function x1+..+x5
    bool lagrange_ok = false;
};

// The critical points of the height function on Q_i intersected with the
// sphere; each is certified by the exact Lagrange multiplier test and its
// Morse index read from the Hessian sign in a rational chart.
std::vector<CriticalPoint> quadric_critical_points(int i);

// True when every element of G carries the defining pair of Q_i to the
// defining pair of Q_{perm(i)} up to sign, for all i.
bool quadric_family_preserved();

}  // namespace torilink

#endif
