#include "torilink/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "torilink/alexander.hpp"

namespace torilink {

long totient(long d) {
    if (d <= 0) throw std::invalid_argument("totient: nonpositive argument");
    long result = d, n = d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> positive_divisors(long n) {
    if (n == 0) throw std::invalid_argument("positive_divisors: zero");
    n = std::abs(n);
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long CyclotomicExponents::degree() const {
    long deg = 0;
    for (const auto& [d, k] : e) deg += k * totient(d);
    return deg;
}

CyclotomicExponents specialize_generator(const std::vector<int>& a,
                                         const std::vector<long>& phi) {
    if (a.size() != phi.size())
        throw std::invalid_argument("specialize_generator: length mismatch");
    CyclotomicExponents out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (phi[i] == 0) {
            out.vanishes = true;
            out.e.clear();
            return out;
        }
        for (long d : positive_divisors(phi[i])) out.e[d] += a[i];
    }
    return out;
}

std::optional<long> delta_phi_degree(const std::vector<long>& phi) {
    std::map<long, long> mins;
    bool any = false;
    for (const auto& a : predicate_exponent_set()) {
        CyclotomicExponents ce = specialize_generator(a, phi);
        if (ce.vanishes) continue;
        if (!any) {
            mins = ce.e;
            any = true;
        } else {
            for (auto it = mins.begin(); it != mins.end();) {
                auto jt = ce.e.find(it->first);
                long other = jt == ce.e.end() ? 0 : jt->second;
                it->second = std::min(it->second, other);
                if (it->second == 0)
                    it = mins.erase(it);
                else
                    ++it;
            }
        }
    }
    if (!any) return std::nullopt;
    long deg = 0;
    for (const auto& [d, k] : mins) deg += k * totient(d);
    return deg;
}

CyclicBetti cyclic_cover_betti(const std::vector<long>& phi) {
    if (phi.size() != 5) throw std::invalid_argument("cyclic_cover_betti: need 5 entries");
    long g = 0;
    for (long x : phi) g = std::gcd(g, x);
    if (g != 1) throw std::invalid_argument("cyclic_cover_betti: class not primitive");
    CyclicBetti b;
    b.b1 = delta_phi_degree(phi);
    b.b2 = std::nullopt;
    bool all_nonzero = std::all_of(phi.begin(), phi.end(), [](long x) { return x != 0; });
    b.b3 = all_nonzero ? std::optional<long>(0) : std::nullopt;
    return b;
}

ZPoly ZPoly::zero() { return {}; }

ZPoly ZPoly::one() {
    ZPoly p;
    p.c = {1};
    return p;
}

ZPoly ZPoly::t_power_minus_one(long n) {
    if (n < 1) throw std::invalid_argument("t_power_minus_one: exponent");
    ZPoly p;
    p.c.assign(n + 1, 0);
    p.c[0] = -1;
    p.c[n] = 1;
    return p;
}

void ZPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    ZPoly p;
    p.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) p.c[i + j] += c[i] * o.c[j];
    }
    p.normalize();
    return p;
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const mpz_class& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return zero();
    mpz_class g = content();
    if (c.back() < 0) g = -g;
    ZPoly p;
    for (const mpz_class& x : c) p.c.push_back(x / g);
    return p;
}

namespace {

// Remainder of lc(b)^(deg a - deg b + 1) * a modulo b; exact over Z.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const int db = b.degree();
    const mpz_class& lb = b.c.back();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        mpz_class lead = a.c.back();
        for (mpz_class& x : a.c) x *= lb;
        for (int i = 0; i <= db; ++i) a.c[shift + i] -= lead * b.c[i];
        a.normalize();
    }
    return a;
}

}  // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

ZPoly expand_generator(const std::vector<int>& a, const std::vector<long>& phi) {
    if (a.size() != phi.size())
        throw std::invalid_argument("expand_generator: length mismatch");
    ZPoly p = ZPoly::one();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (phi[i] == 0)
            throw std::invalid_argument("expand_generator: generator vanishes");
        ZPoly f = ZPoly::t_power_minus_one(std::abs(phi[i]));
        for (int k = 0; k < a[i]; ++k) p = p * f;
    }
    return p;
}

std::optional<long> delta_phi_degree_oracle(const std::vector<long>& phi) {
    std::vector<ZPoly> gens;
    for (const auto& a : predicate_exponent_set()) {
        bool vanishes = false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0 && phi[i] == 0) vanishes = true;
        if (!vanishes) gens.push_back(expand_generator(a, phi));
    }
    if (gens.empty()) return std::nullopt;
    // Low degrees first so the running gcd collapses early.
    std::sort(gens.begin(), gens.end(),
              [](const ZPoly& x, const ZPoly& y) { return x.degree() < y.degree(); });
    ZPoly g = gens[0];
    for (std::size_t i = 1; i < gens.size() && g.degree() > 0; ++i)
        g = zpoly_gcd(g, gens[i]);
    return g.degree();
}

std::vector<long> canonical_phi(const std::vector<long>& phi) {
    if (phi.size() != 5) throw std::invalid_argument("canonical_phi: need 5 entries");
    std::vector<long> abs(5);
    for (int i = 0; i < 5; ++i) abs[i] = std::abs(phi[i]);
    std::vector<long> best = abs;
    for (int m : {1, 2, 3, 4}) {
        for (int c = 0; c < 5; ++c) {
            std::vector<long> img(5);
            for (int i = 0; i < 5; ++i) img[i] = abs[(m * i + c) % 5];
            if (img < best) best = img;
        }
    }
    return best;
}

}  // namespace torilink
