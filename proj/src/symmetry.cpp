#include "torilink/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace torilink {

Perm5 Perm5::operator*(const Perm5& o) const {
    Perm5 r;
    for (int i = 0; i < 5; ++i) r.img[i] = img[o.img[i]];
    return r;
}

Perm5 Perm5::inverse() const {
    Perm5 r;
    for (int i = 0; i < 5; ++i) r.img[img[i]] = i;
    return r;
}

SignedPerm5 SignedPerm5::operator*(const SignedPerm5& o) const {
    // (g*h)(x) = g(h(x)) with g(x)[i] = sign[i] * x[perm[i]].
    SignedPerm5 r;
    for (int i = 0; i < 5; ++i) {
        r.perm.img[i] = o.perm.img[perm.img[i]];
        r.sign[i] = sign[i] * o.sign[perm.img[i]];
    }
    return r;
}

SignedPerm4 SignedPerm4::operator*(const SignedPerm4& o) const {
    SignedPerm4 r;
    for (int i = 0; i < 4; ++i) {
        r.perm[i] = o.perm[perm[i]];
        r.sign[i] = sign[i] * o.sign[perm[i]];
    }
    return r;
}

namespace {

template <typename T>
std::vector<T> close_under_product(const std::vector<T>& gens) {
    std::set<T> seen(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<T> snapshot(seen.begin(), seen.end());
        for (const T& x : snapshot)
            for (const T& y : snapshot)
                if (seen.insert(x * y).second) grew = true;
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Perm5> group_H() {
    Perm5 shift, twice;
    for (int i = 0; i < 5; ++i) {
        shift.img[i] = (i + 1) % 5;
        twice.img[i] = (2 * i) % 5;
    }
    return close_under_product<Perm5>({shift, twice});
}

std::vector<SignedPerm5> group_G() {
    std::vector<SignedPerm5> gens;
    for (const Perm5& h : std::vector<Perm5>{
             []{ Perm5 p; for (int i = 0; i < 5; ++i) p.img[i] = (i + 1) % 5; return p; }(),
             []{ Perm5 p; for (int i = 0; i < 5; ++i) p.img[i] = (2 * i) % 5; return p; }()})
        gens.push_back({h, {1, 1, 1, 1, 1}});
    SignedPerm5 flip;
    flip.sign[0] = -1;
    gens.push_back(flip);
    return close_under_product(gens);
}

OrbitReport transitivity_on_subsets(const std::vector<Perm5>& group, int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("subset size must be 1..5");
    std::vector<int> masks;
    for (int m = 1; m < 32; ++m)
        if (std::popcount(static_cast<unsigned>(m)) == k) masks.push_back(m);

    std::map<int, int> orbit_of;
    OrbitReport rep;
    for (const int seed : masks) {
        if (orbit_of.count(seed)) continue;
        const int id = static_cast<int>(rep.orbit_sizes.size());
        std::vector<int> frontier{seed};
        orbit_of[seed] = id;
        int size = 0;
        while (!frontier.empty()) {
            const int m = frontier.back();
            frontier.pop_back();
            ++size;
            for (const Perm5& g : group) {
                int im = 0;
                for (int i = 0; i < 5; ++i)
                    if (m >> i & 1) im |= 1 << g.img[i];
                if (orbit_of.emplace(im, id).second) frontier.push_back(im);
            }
        }
        rep.orbit_sizes.push_back(size);
    }
    std::sort(rep.orbit_sizes.rbegin(), rep.orbit_sizes.rend());
    rep.transitive = rep.orbit_sizes.size() == 1;
    return rep;
}

std::vector<SignedPerm4> borromean_symmetries() {
    std::vector<SignedPerm4> out;
    std::array<int, 3> sigma{0, 1, 2};
    do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        const int parity = (inversions % 2 == 0) ? 1 : -1;
        for (int s = 0; s < 8; ++s) {
            SignedPerm4 g;
            for (int i = 0; i < 3; ++i) {
                g.perm[i] = sigma[i];
                g.sign[i] = (s >> i & 1) ? -1 : 1;
            }
            g.perm[3] = 3;
            g.sign[3] = parity;
            out.push_back(g);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Q2 Q2::operator*(const Q2& o) const {
    return Q2(a * o.a + 2 * b * o.b, a * o.b + b * o.a);
}

Q2 Q2::inverse() const {
    const mpq_class norm = a * a - 2 * b * b;
    if (norm == 0) throw std::domain_error("division by zero in Q(sqrt2)");
    return Q2(a / norm, -b / norm);
}

int Q2::sign() const {
    const int sa = sgn(a), sb = sgn(b);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite strict signs: compare |a| with |b|sqrt2 via squares.
    return (a * a > 2 * b * b) ? sa : sb;
}

std::string Q2::str() const {
    if (b == 0) return a.get_str();
    std::string s;
    if (a != 0) s = a.get_str() + (b > 0 ? "+" : "-");
    else if (b < 0) s = "-";
    const mpq_class babs = abs(b);
    if (babs != 1) s += babs.get_str() + "*";
    return s + "sqrt2";
}

int quadric_coefficient(int i, int k) {
    if (i < 0 || i > 4 || k < 0 || k > 4) throw std::out_of_range("coordinate index");
    switch (((k - i) % 5 + 5) % 5) {
        case 1: case 4: return 1;
        case 2: case 3: return -1;
        default: return 0;
    }
}

Q2 quadric_form(int i, const Point5& x) {
    Q2 acc;
    for (int k = 0; k < 5; ++k) {
        const int c = quadric_coefficient(i, k);
        if (c == 1) acc = acc + x[k] * x[k];
        else if (c == -1) acc = acc - x[k] * x[k];
    }
    return acc;
}

Q2 sphere_form(const Point5& x) {
    Q2 acc(mpq_class(-1));
    for (int k = 0; k < 5; ++k) acc = acc + x[k] * x[k];
    return acc;
}

namespace {

bool rational_sqrt(const mpq_class& y, mpq_class& out) {
    if (y < 0) return false;
    const mpz_class num = y.get_num(), den = y.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    out = r;
    return true;
}

// Nonnegative square root inside Q(sqrt2). The values reaching here are
// either rational squares or twice one.
Q2 sqrt_in_q2(const mpq_class& y) {
    if (y == 0) return Q2();
    if (y < 0) throw std::domain_error("square root of a negative value");
    mpq_class r;
    if (rational_sqrt(y, r)) return Q2(r);
    if (rational_sqrt(y / 2, r)) return Q2(0, r);
    throw std::domain_error("square root does not lie in Q(sqrt2)");
}

bool point_less(const Point5& x, const Point5& y) {
    for (int c = 0; c < 5; ++c) {
        if (x[c].a != y[c].a) return x[c].a < y[c].a;
        if (x[c].b != y[c].b) return x[c].b < y[c].b;
    }
    return false;
}

int rank_q2(std::vector<std::array<Q2, 5>> rows) {
    int rank = 0;
    for (int col = 0; col < 5 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Q2 inv = rows[rank][col].inverse();
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Q2 f = rows[r][col] * inv;
            for (int c = col; c < 5; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<Point5> quadric_intersection(int i, int j) {
    if (i < 0 || i > 4 || j < 0 || j > 4) throw std::out_of_range("quadric index");
    if (i == j) throw std::invalid_argument("quadric indices must differ");

    std::vector<int> K;
    for (int k = 0; k < 5; ++k)
        if (k != i && k != j) K.push_back(k);

    // Linear system in the squared coordinates y_k, k in K.
    mpq_class A[3][4];
    for (int c = 0; c < 3; ++c) {
        A[0][c] = quadric_coefficient(i, K[c]);
        A[1][c] = quadric_coefficient(j, K[c]);
        A[2][c] = 1;
    }
    A[2][3] = 1;

    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int r = col; r < 3; ++r)
            if (A[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::runtime_error("degenerate quadric pair");
        for (int c = 0; c <= 3; ++c) std::swap(A[col][c], A[pivot][c]);
        for (int r = 0; r < 3; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const mpq_class f = A[r][col] / A[col][col];
            for (int c = col; c <= 3; ++c) A[r][c] -= f * A[col][c];
        }
    }

    mpq_class y[3];
    for (int c = 0; c < 3; ++c) {
        y[c] = A[c][3] / A[c][c];
        if (y[c] < 0) return {};
    }

    Q2 root[3];
    std::vector<int> live;
    for (int c = 0; c < 3; ++c) {
        root[c] = sqrt_in_q2(y[c]);
        if (!root[c].is_zero()) live.push_back(c);
    }

    std::vector<Point5> pts;
    for (int s = 0; s < (1 << live.size()); ++s) {
        Point5 p{};
        for (int c = 0; c < 3; ++c) p[K[c]] = root[c];
        for (size_t t = 0; t < live.size(); ++t)
            if (s >> t & 1) p[K[live[t]]] = -p[K[live[t]]];
        if (!p[i].is_zero() || !p[j].is_zero() || !sphere_form(p).is_zero() ||
            !quadric_form(i, p).is_zero() || !quadric_form(j, p).is_zero())
            throw std::logic_error("intersection point fails its defining equations");
        pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), point_less);
    return pts;
}

namespace {

// On a circle x_a^2 + x_b^2 = 1/2 the height x_a + x_b has exactly two
// critical points, x_a = x_b = +-1/2.  In the chart u = tan(theta/2) the
// height is g(u) = r(1+2u-u^2)/(1+u^2) with r = sqrt2/2, its critical
// parameters are u = -1 +- sqrt2, and there g'' = -4r(1+u)/(1+u^2)^2.
// Returns true when the point with x_a = x_b = s/2 is a local maximum,
// i.e. contributes one descending direction.
bool circle_descends(int s) {
    const Q2 r(0, mpq_class(1, 2));
    const Q2 u(mpq_class(-1), mpq_class(s));
    const Q2 one(mpq_class(1));
    const Q2 den = one + u * u;

    const Q2 gprime_num = Q2(mpq_class(2)) - Q2(mpq_class(4)) * u - Q2(mpq_class(2)) * u * u;
    if (!gprime_num.is_zero()) throw std::logic_error("chart parameter is not critical");
    const Q2 height = r * (one + Q2(mpq_class(2)) * u - u * u) / den;
    if (!(height == Q2(mpq_class(s)))) throw std::logic_error("chart height mismatch");

    const Q2 gsecond = -(Q2(mpq_class(4)) * r * (one + u)) / (den * den);
    const int sg = gsecond.sign();
    if (sg == 0) throw std::logic_error("degenerate critical point");
    return sg < 0;
}

}  // namespace

std::vector<CriticalPoint> quadric_critical_points(int i) {
    if (i < 0 || i > 4) throw std::out_of_range("quadric index");
    const int a1 = (i + 1) % 5, a4 = (i + 4) % 5;
    const int b2 = (i + 2) % 5, b3 = (i + 3) % 5;
    const Q2 half(mpq_class(1, 2));

    std::vector<CriticalPoint> out;
    for (const int sa : {-1, 1}) {
        for (const int sb : {-1, 1}) {
            CriticalPoint cp;
            cp.x[a1] = cp.x[a4] = (sa > 0) ? half : -half;
            cp.x[b2] = cp.x[b3] = (sb > 0) ? half : -half;

            // Gradients of the three constraints, up to scalars: the
            // sphere, the hyperplane x_i = 0 and the quadric.
            std::vector<std::array<Q2, 5>> rows(3);
            rows[0] = cp.x;
            rows[1][i] = Q2(mpq_class(1));
            for (int k = 0; k < 5; ++k)
                rows[2][k] = Q2(mpq_class(quadric_coefficient(i, k))) * cp.x[k];
            const int rk = rank_q2(rows);
            std::array<Q2, 5> ones;
            ones.fill(Q2(mpq_class(1)));
            rows.push_back(ones);
            cp.lagrange_ok = (rk == 3) && (rank_q2(rows) == 3);

            cp.morse_index = (circle_descends(sa) ? 1 : 0) + (circle_descends(sb) ? 1 : 0);
            out.push_back(cp);
        }
    }
    return out;
}

bool quadric_family_preserved() {
    for (const SignedPerm5& g : group_G()) {
        std::array<int, 5> pinv{};
        for (int k = 0; k < 5; ++k) pinv[g.perm.img[k]] = k;
        for (int i = 0; i < 5; ++i) {
            // Pulling the linear form x_i back through g gives, up to sign,
            // the linear form of index g.perm.img[i]; the quadratic form
            // must land on the same index.
            const int j = g.perm.img[i];
            int tau = 0;
            for (int m = 0; m < 5; ++m) {
                const int lhs = quadric_coefficient(i, pinv[m]);
                const int rhs = quadric_coefficient(j, m);
                if (lhs == 0 && rhs == 0) continue;
                if (lhs == 0 || rhs == 0) return false;
                const int t = (lhs == rhs) ? 1 : -1;
                if (tau == 0) tau = t;
                else if (tau != t) return false;
            }
        }
    }
    return true;
}

}  // namespace torilink
