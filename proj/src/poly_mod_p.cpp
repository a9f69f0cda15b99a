#include "ringcover/poly_mod_p.hpp"

#include <algorithm>
#include <sstream>

#include "ringcover/errors.hpp"

namespace ringcover {

void PolyModP::normalize() {
    for (auto& x : c_) x = mod_floor(x, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP::PolyModP(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    if (p_ < 2) throw InternalError("PolyModP: modulus must be >= 2");
    normalize();
}

PolyModP PolyModP::from_int_poly(const PolyInt& f, const Int& p) {
    return PolyModP(p, f.coeffs());
}

PolyModP PolyModP::monomial(const Int& p, const Int& c, size_t deg) {
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return PolyModP(p, std::move(v));
}

const Int& PolyModP::coeff(size_t i) const {
    static const Int zero{0};
    return i < c_.size() ? c_[i] : zero;
}

const Int& PolyModP::leading() const {
    if (c_.empty()) throw InternalError("leading of zero polynomial");
    return c_.back();
}

PolyInt PolyModP::lift() const { return PolyInt(c_); }

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return PolyModP(a.p_, std::move(v));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return PolyModP(a.p_, std::move(v));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
    if (a.is_zero() || b.is_zero()) return PolyModP::zero(a.p_);
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyModP(a.p_, std::move(v));
}

PolyModP PolyModP::scaled(const Int& c) const {
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
    return PolyModP(p_, std::move(v));
}

void PolyModP::divmod(const PolyModP& num, const PolyModP& den, PolyModP& q, PolyModP& r) {
    if (den.is_zero()) throw InternalError("PolyModP::divmod by zero");
    const Int& p = num.p_;
    std::vector<Int> rem = num.c_;
    int dd = den.degree();
    Int lcinv = mod_inverse(den.leading(), p);
    std::vector<Int> quot;
    if (num.degree() >= dd) quot.assign(static_cast<size_t>(num.degree() - dd) + 1, Int(0));
    for (int i = num.degree(); i >= dd; --i) {
        Int f = mod_floor(rem[static_cast<size_t>(i)] * lcinv, p);
        if (f == 0) continue;
        quot[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            size_t k = static_cast<size_t>(i - dd + j);
            rem[k] = mod_floor(rem[k] - f * den.coeff(static_cast<size_t>(j)), p);
        }
    }
    q = PolyModP(p, std::move(quot));
    r = PolyModP(p, std::move(rem));
}

PolyModP PolyModP::mod(const PolyModP& m) const {
    PolyModP q, r;
    divmod(*this, m, q, r);
    return r;
}

PolyModP PolyModP::divexact(const PolyModP& den) const {
    PolyModP q, r;
    divmod(*this, den, q, r);
    if (!r.is_zero()) throw InternalError("divexact: division not exact");
    return q;
}

PolyModP PolyModP::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(mod_inverse(leading(), p_));
}

PolyModP PolyModP::derivative() const {
    if (c_.size() <= 1) return zero(p_);
    std::vector<Int> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return PolyModP(p_, std::move(d));
}

Int PolyModP::evaluate(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = mod_floor(acc * x + c_[i], p_);
    return acc;
}

std::string PolyModP::to_string() const { return lift().to_string(); }

PolyModP poly_gcd(PolyModP a, PolyModP b) {
    while (!b.is_zero()) {
        PolyModP r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyModP poly_pow_mod(const PolyModP& base, Int e, const PolyModP& m) {
    PolyModP result = PolyModP::one(base.modulus());
    PolyModP b = base.mod(m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * b).mod(m);
        e >>= 1;
        if (e > 0) b = (b * b).mod(m);
    }
    return result;
}

bool poly_order_less(const PolyModP& a, const PolyModP& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

// x^(p^k) mod m, by k successive p-th powers.
static PolyModP frobenius_power(const PolyModP& m, unsigned k) {
    const Int& p = m.modulus();
    PolyModP t = PolyModP::x(p).mod(m);
    for (unsigned i = 0; i < k; ++i) t = poly_pow_mod(t, p, m);
    return t;
}

bool PolyModP::is_irreducible() const {
    int d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin's test: x^(p^d) == x mod f, and x^(p^(d/l)) - x is a unit mod f
    // for every prime l dividing d.
    PolyModP f = monic();
    PolyModP xp = frobenius_power(f, static_cast<unsigned>(d));
    if (!(xp - PolyModP::x(p_).mod(f)).is_zero()) return false;
    for (long l : distinct_prime_divisors(d)) {
        PolyModP t = frobenius_power(f, static_cast<unsigned>(d / l)) - PolyModP::x(p_).mod(f);
        if (poly_gcd(t, f).degree() != 0) return false;
    }
    return true;
}

PolyModP FactorizationModP::expand() const {
    PolyModP acc = PolyModP::one(p).scaled(unit);
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) acc = acc * g;
    return acc;
}

namespace {

// f(x) = g(x^p) over F_p: the p-th root is coefficient-preserving.
PolyModP pth_root(const PolyModP& f) {
    const Int& p = f.modulus();
    unsigned long pl = static_cast<unsigned long>(to_long(p));
    std::vector<Int> g;
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += pl) g.push_back(f.coeff(i));
    return PolyModP(p, std::move(g));
}

// Squarefree decomposition of a monic polynomial over F_p.
std::vector<std::pair<PolyModP, int>> squarefree_decompose(const PolyModP& f) {
    std::vector<std::pair<PolyModP, int>> out;
    const Int& p = f.modulus();
    if (f.degree() <= 0) return out;
    PolyModP d = f.derivative();
    if (d.is_zero()) {
        for (auto& [g, e] : squarefree_decompose(pth_root(f).monic()))
            out.emplace_back(g, e * to_long(p));
        return out;
    }
    PolyModP c = poly_gcd(f, d);
    PolyModP w = f.divexact(c);
    int i = 1;
    while (w.degree() > 0) {
        PolyModP y = poly_gcd(w, c);
        PolyModP z = w.divexact(y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        c = c.divexact(y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [g, e] : squarefree_decompose(pth_root(c).monic()))
            out.emplace_back(g, e * to_long(p));
    return out;
}

PolyModP random_poly_below(const Int& p, int deg_bound, DetRng& rng) {
    std::vector<Int> c(static_cast<size_t>(deg_bound));
    for (auto& x : c) x = rng.below(p);
    return PolyModP(p, std::move(c));
}

// Split a monic squarefree product of degree-d irreducibles (Cantor &
// Zassenhaus equal-degree splitting; char 2 uses the trace map).
void equal_degree_split(const PolyModP& f, int d, DetRng& rng, std::vector<PolyModP>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Int& p = f.modulus();
    for (;;) {
        PolyModP a = random_poly_below(p, f.degree(), rng);
        if (a.degree() < 1) continue;
        PolyModP g = poly_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.divexact(g), d, rng, out);
            return;
        }
        PolyModP b;
        if (p == 2) {
            b = PolyModP::zero(p);
            PolyModP t = a.mod(f);
            for (int i = 0; i < d; ++i) {
                b = b + t;
                t = (t * t).mod(f);
            }
        } else {
            Int e = (int_pow(p, static_cast<unsigned long>(d)) - 1) / 2;
            b = poly_pow_mod(a, e, f) - PolyModP::one(p);
        }
        g = poly_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.divexact(g), d, rng, out);
            return;
        }
    }
}

// Distinct-degree stage on a monic squarefree polynomial.
std::vector<std::pair<PolyModP, int>> distinct_degree_split(PolyModP f, DetRng& rng) {
    std::vector<std::pair<PolyModP, int>> out; // (irreducible, degree d) pieces
    const Int& p = f.modulus();
    PolyModP h = PolyModP::x(p).mod(f);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.emplace_back(f, f.degree());
            break;
        }
        h = poly_pow_mod(h, p, f);
        PolyModP g = poly_gcd(h - PolyModP::x(p).mod(f), f);
        if (g.degree() > 0) {
            std::vector<PolyModP> pieces;
            equal_degree_split(g.monic(), d, rng, pieces);
            for (auto& q : pieces) out.emplace_back(q, d);
            f = f.divexact(g);
            h = h.mod(f);
        }
    }
    return out;
}

} // namespace

FactorizationModP factor_mod_p(const PolyModP& f) {
    const Int& p = f.modulus();
    if (!is_prime(p)) throw CompositeModulusError("factor_mod_p: modulus is not prime");
    if (f.is_zero()) throw ZeroPolynomialError("factor_mod_p: polynomial vanishes mod p");
    FactorizationModP result;
    result.p = p;
    result.unit = f.leading();
    if (f.degree() == 0) return result;
    DetRng rng;
    PolyModP g = f.monic();
    for (const auto& [part, mult] : squarefree_decompose(g)) {
        std::vector<PolyModP> pieces;
        for (auto& [q, d] : distinct_degree_split(part, rng)) {
            (void)d;
            pieces.push_back(q.monic());
        }
        for (auto& q : pieces) result.factors.emplace_back(q, mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return poly_order_less(a.first, b.first); });
    return result;
}

FactorizationModP factor_mod_p(const PolyInt& f, const Int& p) {
    if (!is_prime(p)) throw CompositeModulusError("factor_mod_p: modulus is not prime");
    return factor_mod_p(PolyModP::from_int_poly(f, p));
}

Int count_monic_irreducible(const Int& p, unsigned f) {
    if (f == 0) throw InternalError("count_monic_irreducible: degree must be >= 1");
    // (1/f) * sum over squarefree divisors d of f of mu(d) p^(f/d).
    std::vector<long> primes = distinct_prime_divisors(static_cast<long>(f));
    Int total = 0;
    size_t k = primes.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        long d = 1;
        int mu = 1;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) {
                d *= primes[i];
                mu = -mu;
            }
        total += Int(mu) * int_pow(p, f / static_cast<unsigned long>(d));
    }
    return total / static_cast<unsigned long>(f);
}

Int covering_threshold(const Int& p, unsigned f) {
    if (f == 1) return p;
    return count_monic_irreducible(p, f) + 1;
}

unsigned distinct_prime_factor_count(unsigned n) {
    return static_cast<unsigned>(distinct_prime_divisors(static_cast<long>(n)).size());
}

unsigned count_maximal_subrings_of_field(unsigned f) {
    return f == 1 ? 1 : distinct_prime_factor_count(f);
}

PolyModP least_irreducible(const Int& p, unsigned f) {
    if (f == 0) throw InternalError("least_irreducible: degree must be >= 1");
    // Enumerate monic polynomials in coefficient order, constant term first.
    std::vector<Int> c(f + 1, Int(0));
    c[f] = 1;
    for (;;) {
        PolyModP cand(p, c);
        if (cand.degree() == static_cast<int>(f) && cand.is_irreducible()) return cand;
        size_t i = 0;
        for (;;) {
            c[i] += 1;
            if (c[i] < p) break;
            c[i] = 0;
            if (++i == f) throw InternalError("least_irreducible: exhausted search");
        }
    }
}

} // namespace ringcover
