#include "ringcover/order.hpp"

#include <utility>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

// Product of two power-basis coordinate rows, reduced by the monic field
// polynomial: theta^n = -(f_0 + f_1 theta + ... + f_{n-1} theta^{n-1}).
std::vector<Int> power_mul_mod_f(const std::vector<Int>& a, const std::vector<Int>& b,
                                 const PolyInt& f) {
    const int n = f.degree();
    std::vector<Int> prod(2 * static_cast<size_t>(n) - 1, Int(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    for (int d = 2 * n - 2; d >= n; --d) {
        if (prod[d] == 0) continue;
        const Int c = prod[d];
        prod[d] = 0;
        for (int j = 0; j < n; ++j) prod[d - n + j] -= c * f.coeff(j);
    }
    prod.resize(n);
    return prod;
}

bool divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

} // namespace

std::vector<Int> OrderBasis::mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> out(n, Int(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        const std::vector<Int> part = vec_mat(b, mult[i]);
        for (int k = 0; k < n; ++k) out[k] += a[i] * part[k];
    }
    return out;
}

std::vector<Int> OrderBasis::mul_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                                     const Int& m) const {
    std::vector<Int> ra(a), rb(b);
    for (Int& v : ra) v = mod_floor(v, m);
    for (Int& v : rb) v = mod_floor(v, m);
    std::vector<Int> out = mul(ra, rb);
    for (Int& v : out) v = mod_floor(v, m);
    return out;
}

std::vector<Int> OrderBasis::pow_mod(std::vector<Int> a, Int e, const Int& m) const {
    if (e < 0) throw InternalError("negative exponent in order power");
    std::vector<Int> acc = integer_coords(1);
    for (Int& v : acc) v = mod_floor(v, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(acc, a, m);
        e >>= 1;
        if (e > 0) a = mul_mod(a, a, m);
    }
    return acc;
}

IntMat OrderBasis::mult_matrix(const std::vector<Int>& a) const {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m.at(j, k) += a[i] * mult[i].at(j, k);
    }
    return m;
}

std::vector<Int> OrderBasis::integer_coords(const Int& c) const {
    std::vector<Int> v(n, Int(0));
    v[0] = c;
    return v;
}

namespace detail {

OrderBasis detail_make_order_impl(const PolyInt& f, const Int& p, IntMat scaled, Int denom,
                                  bool p_maximal) {
    const int n = f.degree();
    IntMat H = hnf_lower(std::move(scaled));
    if (H.rows() != static_cast<size_t>(n) || H.cols() != static_cast<size_t>(n))
        throw InternalError("order basis does not have full rank");

    // Remove any common factor of p between the basis and its denominator.
    while (denom > 1) {
        bool all = true;
        for (size_t r = 0; r < H.rows() && all; ++r)
            for (size_t c = 0; c <= r && all; ++c)
                if (!divisible(H.at(r, c), p)) all = false;
        if (!all) break;
        for (size_t r = 0; r < H.rows(); ++r)
            for (size_t c = 0; c <= r; ++c) H.at(r, c) /= p;
        denom /= p;
    }
    if (H.at(0, 0) != denom)
        throw InternalError("order basis does not contain 1");

    OrderBasis o;
    o.p = p;
    o.n = n;
    o.field_poly = f;
    o.basis = H;
    o.denom = denom;
    o.p_maximal = p_maximal;
    o.mult.assign(n, IntMat(n, n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const std::vector<Int> prod = power_mul_mod_f(H.row(i), H.row(j), f);
            std::vector<Int> y;
            if (!solve_staircase(H, prod, y))
                throw InternalError("order basis is not multiplicatively closed");
            for (int k = 0; k < n; ++k) {
                if (!divisible(y[k], denom))
                    throw InternalError("order basis is not multiplicatively closed");
                y[k] /= denom;
                o.mult[i].at(j, k) = y[k];
                o.mult[j].at(i, k) = y[k];
            }
        }
    }
    return o;
}

OrderBasis make_order(const PolyInt& f, const Int& p, IntMat scaled_basis, Int denom,
                      bool p_maximal) {
    return detail_make_order_impl(f, p, std::move(scaled_basis), std::move(denom), p_maximal);
}

} // namespace detail

OrderBasis order_of_power_basis(const NumberField& K, const Int& p) {
    return detail::make_order(K.poly(), p, IntMat::identity(K.degree()), 1, false);
}

std::pair<bool, PolyModP> dedekind_p_maximal(const NumberField& K, const Int& p) {
    const FactorizationModP fac = factor_mod_p(K.poly(), p);
    PolyModP gbar = PolyModP::one(p);
    for (const auto& [g, e] : fac.factors) gbar = gbar * g;
    const PolyModP fbar = PolyModP::from_int_poly(K.poly(), p);
    const PolyModP hbar = fbar.divexact(gbar);
    const PolyInt diff = K.poly() - gbar.lift() * hbar.lift();
    std::vector<Int> mc(diff.coeffs());
    for (Int& c : mc) {
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
            throw InternalError("radical split failed to match mod p");
        c /= p;
    }
    const PolyModP mbar = PolyModP::from_int_poly(PolyInt(std::move(mc)), p);
    const PolyModP u = poly_gcd(poly_gcd(gbar, hbar), mbar);
    return {u.degree() == 0, u};
}

IntMat p_radical(const OrderBasis& order) {
    const int n = order.n;
    const Int& p = order.p;
    // Matrix of the p-power map on O/pO: row i = coordinates of omega_i^p.
    IntMat frob(n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        frob.set_row(i, order.pow_mod(std::move(e), p, p));
    }
    // Iterate until the exponent p^k reaches n, so kernel = nilpotents.
    unsigned long k = 1;
    Int pk = p;
    while (pk < n) {
        pk *= p;
        ++k;
    }
    const IntMat frob_k = mat_pow_mod(frob, k, p);
    const IntMat ker = left_kernel_mod_p(frob_k, p);
    IntMat gens = mat_scale(IntMat::identity(n), p);
    if (ker.rows() > 0) gens = stack(gens, ker);
    return hnf_lower(gens);
}

namespace {

// One enlargement step: replace the order by the multiplier ring of the
// radical of pO.  Returns false when the order was already its own
// multiplier ring (i.e. p-maximal).
bool enlarge_once(const NumberField& K, OrderBasis& order) {
    const int n = order.n;
    const Int& p = order.p;
    const IntMat rad = p_radical(order);

    // Row i describes the action of omega_i on rad/p*rad, written in the
    // radical basis: x = sum a_i omega_i multiplies rad into p*rad exactly
    // when a lies in the left kernel.
    IntMat action(n, static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        for (int j = 0; j < n; ++j) {
            const std::vector<Int> prod = order.mul(e, rad.row(j));
            std::vector<Int> c;
            if (!solve_staircase(rad, prod, c))
                throw InternalError("radical is not an ideal of the order");
            for (int k = 0; k < n; ++k) action.at(i, static_cast<size_t>(j) * n + k) = mod_floor(c[k], p);
        }
    }
    const IntMat ker = left_kernel_mod_p(action, p);

    // Lattice of y in O with y * rad inside p * rad; the multiplier ring is
    // (1/p) times this lattice.
    IntMat mlat = mat_scale(IntMat::identity(n), p);
    if (ker.rows() > 0) mlat = stack(mlat, ker);
    mlat = hnf_lower(mlat);

    const IntMat new_scaled = mat_mul(mlat, order.basis);
    OrderBasis next = detail::make_order(K.poly(), p, new_scaled, order.denom * p, false);
    if (next.basis == order.basis && next.denom == order.denom) return false;
    order = std::move(next);
    return true;
}

} // namespace

OrderBasis p_maximal_order(const NumberField& K, const Int& p) {
    OrderBasis order = order_of_power_basis(K, p);
    if (dedekind_p_maximal(K, p).first) {
        order.p_maximal = true;
        return order;
    }
    const long cap = 64L * K.degree();
    for (long round = 0; round < cap; ++round) {
        if (!enlarge_once(K, order)) {
            order.p_maximal = true;
            return order;
        }
    }
    throw InternalError("order enlargement failed to stabilise");
}

long index_valuation(const OrderBasis& order) {
    long v = static_cast<long>(order.n) * p_valuation(order.denom, order.p);
    for (int i = 0; i < order.n; ++i) v -= p_valuation(order.basis.at(i, i), order.p);
    return v;
}

std::vector<Int> theta_coords(const OrderBasis& order) {
    return coords_from_power_poly(order, PolyInt::monomial(1, 1));
}

std::vector<Int> coords_from_power_poly(const OrderBasis& order, const PolyInt& g) {
    PolyInt q, r;
    PolyInt::divmod_monic(g, order.field_poly, q, r);
    std::vector<Int> v(order.n, Int(0));
    for (int i = 0; i <= r.degree(); ++i) v[i] = order.denom * r.coeff(i);
    std::vector<Int> x;
    if (!solve_staircase(order.basis, v, x))
        throw InternalError("element does not lie in the order");
    return x;
}

} // namespace ringcover
