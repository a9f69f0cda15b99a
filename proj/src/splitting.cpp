#include "ringcover/splitting.hpp"

#include <algorithm>
#include <utility>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

// Incremental Gaussian elimination over F_p that can express later vectors
// as combinations of the originally added ones.
class RowSpanSolver {
    Int p_;
    size_t dim_;
    std::vector<std::vector<Int>> rows_;   // reduced rows, leading entry 1
    std::vector<size_t> pivcol_;
    std::vector<std::vector<Int>> combo_;  // rows_[k] = combo_[k] * originals
    size_t added_ = 0;

    // Reduce v against the stored rows, tracking the combination used.
    void reduce(std::vector<Int>& v, std::vector<Int>& acc) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Int c = v[pivcol_[k]];
            if (c == 0) continue;
            for (size_t t = 0; t < dim_; ++t) v[t] = mod_floor(v[t] - c * rows_[k][t], p_);
            for (size_t t = 0; t < added_; ++t) acc[t] = mod_floor(acc[t] + c * combo_[k][t], p_);
        }
    }

    static bool all_zero(const std::vector<Int>& v) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }

public:
    RowSpanSolver(Int p, size_t dim) : p_(std::move(p)), dim_(dim) {}

    size_t rank() const { return rows_.size(); }

    // True (with the coefficients over the added originals) when v lies in
    // the span of everything added so far.
    bool express(const std::vector<Int>& v, std::vector<Int>* coeffs) const {
        std::vector<Int> r(dim_);
        for (size_t t = 0; t < dim_; ++t) r[t] = mod_floor(v[t], p_);
        std::vector<Int> acc(added_, Int(0));
        reduce(r, acc);
        if (!all_zero(r)) return false;
        if (coeffs) *coeffs = std::move(acc);
        return true;
    }

    // Add an original vector; returns false (and adds nothing) when it is
    // already in the span.
    bool add(const std::vector<Int>& v) {
        std::vector<Int> r(dim_);
        for (size_t t = 0; t < dim_; ++t) r[t] = mod_floor(v[t], p_);
        std::vector<Int> acc(added_ + 1, Int(0));
        for (auto& c : combo_) c.push_back(Int(0));
        ++added_;
        reduce(r, acc);
        if (all_zero(r)) {
            // dependent: roll back the bookkeeping column
            for (auto& c : combo_) c.pop_back();
            --added_;
            return false;
        }
        // reduce() subtracted acc * originals, so r = v - acc * originals.
        std::vector<Int> combo(added_, Int(0));
        combo.back() = 1; // v itself
        for (size_t t = 0; t < added_; ++t) combo[t] = mod_floor(combo[t] - acc[t], p_);
        size_t piv = 0;
        while (r[piv] == 0) ++piv;
        const Int inv = mod_inverse(r[piv], p_);
        for (size_t t = 0; t < dim_; ++t) r[t] = mod_floor(r[t] * inv, p_);
        for (size_t t = 0; t < added_; ++t) combo[t] = mod_floor(combo[t] * inv, p_);
        rows_.push_back(std::move(r));
        combo_.push_back(std::move(combo));
        pivcol_.push_back(piv);
        return true;
    }
};

// Advance a base-p odometer (slot 0 fastest); false once every slot wrapped.
bool next_tuple(std::vector<Int>& digits, const Int& p) {
    for (Int& d : digits) {
        d += 1;
        if (d < p) return true;
        d = 0;
    }
    return false;
}

// Inverse of a square matrix over F_p.
IntMat invert_mod_p(const IntMat& m, const Int& p) {
    const size_t k = m.rows();
    IntMat aug(k, 2 * k);
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < k; ++c) aug.at(r, c) = mod_floor(m.at(r, c), p);
        aug.at(r, k + r) = 1;
    }
    rref_mod_p(aug, p);
    IntMat inv(k, k);
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < k; ++c) {
            if (aug.at(r, c) != (r == c ? 1 : 0))
                throw InternalError("matrix is singular mod p");
            inv.at(r, c) = aug.at(r, k + c);
        }
    }
    return inv;
}

// The quotient of O/pO by an ideal J, represented by the RREF basis of J.
struct QuotientAlg {
    const OrderBasis* o = nullptr;
    Int p;
    IntMat jbasis; // RREF rows spanning J
    std::vector<size_t> jpivots;
    std::vector<size_t> free_cols;

    void index_columns() {
        free_cols.clear();
        std::vector<bool> is_pivot(o->n, false);
        for (size_t c : jpivots) is_pivot[c] = true;
        for (int c = 0; c < o->n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }

    size_t dim() const { return free_cols.size(); }

    // Canonical representative modulo J (zero at every pivot column).
    std::vector<Int> reduce(std::vector<Int> x) const {
        for (Int& v : x) v = mod_floor(v, p);
        for (size_t k = 0; k < jbasis.rows(); ++k) {
            const Int c = x[jpivots[k]];
            if (c == 0) continue;
            for (int t = 0; t < o->n; ++t) x[t] = mod_floor(x[t] - c * jbasis.at(k, t), p);
        }
        return x;
    }

    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
        return reduce(o->mul_mod(a, b, p));
    }

    std::vector<Int> unit() const { return reduce(o->integer_coords(1)); }
};

// Minimal polynomial of a (reduced) element of the quotient algebra.
PolyModP quotient_min_poly(const QuotientAlg& q, const std::vector<Int>& a) {
    RowSpanSolver solver(q.p, q.o->n);
    std::vector<Int> pw = q.unit();
    for (size_t d = 0; d <= q.dim() + 1; ++d) {
        std::vector<Int> coeffs;
        if (solver.express(pw, &coeffs)) {
            std::vector<Int> mc(d + 1, Int(0));
            for (size_t k = 0; k < d; ++k) mc[k] = mod_floor(-coeffs[k], q.p);
            mc[d] = 1;
            return PolyModP(q.p, std::move(mc));
        }
        solver.add(pw);
        pw = q.mul(pw, a);
    }
    throw InternalError("minimal polynomial search did not terminate");
}

// Evaluate an F_p[x] polynomial at an element of the quotient algebra.
std::vector<Int> quotient_eval(const QuotientAlg& q, const PolyModP& g,
                               const std::vector<Int>& a) {
    const std::vector<Int> u = q.unit();
    std::vector<Int> acc(q.o->n, Int(0));
    for (int k = g.degree(); k >= 0; --k) {
        acc = q.mul(acc, a);
        const Int& c = g.coeff(k);
        if (c == 0) continue;
        for (int t = 0; t < q.o->n; ++t) acc[t] = mod_floor(acc[t] + c * u[t], q.p);
    }
    return acc;
}

struct LeafIdeal {
    IntMat jbasis; // RREF basis of the maximal ideal of O/pO
    int f = 0;
};

// Recursively separate the maximal ideals of O/pO lying over the ideal of q.
void split_quotient(const QuotientAlg& q, DetRng& rng, std::vector<LeafIdeal>& out,
                    int depth) {
    if (depth > 64) throw InternalError("prime separation recursion too deep");
    const Int& p = q.p;
    if (q.dim() == 0) throw InternalError("prime separation reached a zero quotient");

    // Candidate elements: the image of theta, then the coordinate basis of
    // the quotient, then random draws.
    const long basis_candidates = 1 + static_cast<long>(q.dim());
    const long max_attempts = basis_candidates + 200 + 50 * static_cast<long>(q.dim());
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Int> alpha(q.o->n, Int(0));
        if (attempt == 0) {
            alpha = q.reduce(theta_coords(*q.o));
        } else if (attempt < basis_candidates) {
            alpha[q.free_cols[attempt - 1]] = 1;
        } else {
            for (size_t c : q.free_cols) alpha[c] = rng.below(p);
            alpha = q.reduce(alpha);
        }

        const PolyModP m = quotient_min_poly(q, alpha);
        const FactorizationModP fac = factor_mod_p(m);
        for (const auto& [g, mult] : fac.factors)
            if (mult > 1) throw InternalError("semisimple quotient produced a repeated factor");

        if (fac.factors.size() == 1) {
            if (static_cast<size_t>(m.degree()) == q.dim()) {
                out.push_back(LeafIdeal{q.jbasis, static_cast<int>(q.dim())});
                return;
            }
            continue; // alpha does not distinguish the residue fields; retry
        }

        // alpha splits the quotient: the maximal ideals containing J group
        // by which irreducible factor annihilates alpha's image.
        for (const auto& [g, mult] : fac.factors) {
            const std::vector<Int> ga = quotient_eval(q, g, alpha);
            std::vector<std::vector<Int>> rows;
            for (size_t r = 0; r < q.jbasis.rows(); ++r) rows.push_back(q.jbasis.row(r));
            for (size_t c : q.free_cols) {
                std::vector<Int> e(q.o->n, Int(0));
                e[c] = 1;
                rows.push_back(q.mul(ga, e));
            }
            IntMat sub = from_rows(rows);
            std::vector<size_t> pivots;
            const size_t rank = rref_mod_p(sub, p, &pivots);
            IntMat jb(rank, q.o->n);
            for (size_t r = 0; r < rank; ++r) jb.set_row(r, sub.row(r));
            pivots.resize(rank);

            QuotientAlg next;
            next.o = q.o;
            next.p = p;
            next.jbasis = std::move(jb);
            next.jpivots = std::move(pivots);
            next.index_columns();
            if (next.dim() == 0 || next.dim() >= q.dim())
                throw InternalError("prime separation failed to shrink the quotient");
            split_quotient(next, rng, out, depth + 1);
        }
        return;
    }
    throw InternalError("prime separation exhausted its random attempts");
}

// Lattice of the ideal generated by p and the F_p-span rows.
IntMat lattice_from_mod_p_basis(const IntMat& rows, int n, const Int& p) {
    IntMat gens = mat_scale(IntMat::identity(n), p);
    if (rows.rows() > 0) gens = stack(gens, rows);
    return hnf_lower(gens);
}

} // namespace

bool PrimeIdealData::contains(const std::vector<Int>& x) const {
    const std::vector<Int> r = reduce_mod_lattice(lattice, x);
    for (const Int& v : r)
        if (v != 0) return false;
    return true;
}

PolyModP PrimeIdealData::residue(const std::vector<Int>& x) const {
    const std::vector<Int> r = reduce_mod_lattice(lattice, x);
    std::vector<Int> s(f, Int(0));
    for (int k = 0; k < f; ++k) s[k] = r[support[k]];
    std::vector<Int> c(f, Int(0));
    for (int k = 0; k < f; ++k)
        for (int t = 0; t < f; ++t) c[t] = mod_floor(c[t] + s[k] * res_unpow.at(k, t), p);
    return PolyModP(p, std::move(c));
}

PolyModP PrimeIdealData::residue_min_poly(const std::vector<Int>& x) const {
    const PolyModP a = residue(x);
    RowSpanSolver solver(p, f);
    PolyModP pw = PolyModP::one(p);
    for (int d = 0; d <= f; ++d) {
        std::vector<Int> row(f, Int(0));
        for (int k = 0; k <= pw.degree(); ++k) row[k] = pw.coeff(k);
        std::vector<Int> coeffs;
        if (solver.express(row, &coeffs)) {
            std::vector<Int> mc(d + 1, Int(0));
            for (int k = 0; k < d; ++k) mc[k] = mod_floor(-coeffs[k], p);
            mc[d] = 1;
            return PolyModP(p, std::move(mc));
        }
        solver.add(row);
        pw = (pw * a).mod(res_min_poly);
    }
    throw InternalError("residue minimal polynomial search did not terminate");
}

std::vector<Int> PrimeIdealData::lift_residue(const PolyModP& c) const {
    if (c.degree() >= f) throw InternalError("residue polynomial too large");
    std::vector<Int> full(lattice.rows(), Int(0));
    for (int k = 0; k <= c.degree(); ++k) {
        if (c.coeff(k) == 0) continue;
        for (int t = 0; t < f; ++t)
            full[support[t]] = mod_floor(full[support[t]] + c.coeff(k) * res_pow.at(k, t), p);
    }
    return full;
}

int SplittingData::degree_count(int f) const {
    int count = 0;
    for (const PrimeIdealData& d : ideals)
        if (d.f == f) ++count;
    return count;
}

IntMat ideal_product(const OrderBasis& o, const IntMat& a, const IntMat& b) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(a.rows() * b.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.rows(); ++j) rows.push_back(o.mul(a.row(i), b.row(j)));
    return hnf_lower(from_rows(rows));
}

bool in_ideal_power(const OrderBasis& order, const PrimeIdealData& P,
                    const std::vector<Int>& x, int k, int bound_cap) {
    if (k < 1) throw InternalError("ideal power exponent must be positive");
    if (static_cast<long>(k) * P.f * P.e > bound_cap)
        throw BoundExceededError("ideal power k*f*e exceeds the configured bound");
    IntMat power = P.lattice;
    for (int i = 2; i <= k; ++i) power = ideal_product(order, power, P.lattice);
    std::vector<Int> sol;
    return solve_staircase(power, x, sol);
}

std::vector<Int> idempotent_split(const OrderBasis& o, const IntMat& a, const IntMat& b) {
    IntMat u;
    const IntMat h = hnf_lower_transform(stack(a, b), &u);
    if (h != IntMat::identity(o.n))
        throw InternalError("ideals are not coprime");
    std::vector<Int> elem(o.n, Int(0));
    for (size_t j = 0; j < a.rows(); ++j) {
        if (u.at(0, j) == 0) continue;
        const std::vector<Int> row = a.row(j);
        for (int t = 0; t < o.n; ++t) elem[t] += u.at(0, j) * row[t];
    }
    return elem;
}

namespace {

void attach_residue_field(const OrderBasis& o, PrimeIdealData& P) {
    const Int& p = P.p;
    const int n = o.n;
    P.support.clear();
    for (int i = 0; i < n; ++i) {
        const Int& d = P.lattice.at(i, i);
        if (d == p)
            P.support.push_back(i);
        else if (d != 1)
            throw InternalError("prime lattice has an unexpected elementary divisor");
    }
    if (static_cast<int>(P.support.size()) != P.f)
        throw InternalError("prime lattice index disagrees with the residual degree");

    std::vector<Int> digits(P.f, Int(0));
    while (true) {
        std::vector<Int> gamma(n, Int(0));
        for (int k = 0; k < P.f; ++k) gamma[P.support[k]] = digits[k];

        RowSpanSolver solver(p, P.f);
        IntMat pows(P.f, P.f);
        std::vector<Int> x = reduce_mod_lattice(P.lattice, o.integer_coords(1));
        bool ok = true;
        PolyModP minpoly;
        for (int d = 0; d <= P.f; ++d) {
            std::vector<Int> s(P.f, Int(0));
            for (int k = 0; k < P.f; ++k) s[k] = x[P.support[k]];
            std::vector<Int> coeffs;
            if (solver.express(s, &coeffs)) {
                if (d < P.f) {
                    ok = false;
                } else {
                    std::vector<Int> mc(d + 1, Int(0));
                    for (int k = 0; k < d; ++k) mc[k] = mod_floor(-coeffs[k], p);
                    mc[d] = 1;
                    minpoly = PolyModP(p, std::move(mc));
                }
                break;
            }
            if (d == P.f) throw InternalError("residue power sequence failed to close");
            pows.set_row(d, s);
            solver.add(s);
            x = reduce_mod_lattice(P.lattice, o.mul(x, gamma));
        }
        if (ok) {
            if (!minpoly.is_irreducible())
                throw InternalError("residue minimal polynomial is not irreducible");
            P.res_generator = std::move(gamma);
            P.res_min_poly = std::move(minpoly);
            P.res_unpow = invert_mod_p(pows, p);
            P.res_pow = std::move(pows);
            return;
        }
        if (!next_tuple(digits, p))
            throw InternalError("no generator found for the residue field");
    }
}

void attach_second_generator(const OrderBasis& o, std::vector<PrimeIdealData>& ideals,
                             size_t idx, const std::vector<IntMat>& squares) {
    PrimeIdealData& P = ideals[idx];
    const int n = o.n;
    std::vector<Int> digits(n, Int(0));
    while (next_tuple(digits, P.p)) {
        std::vector<Int> pi(n, Int(0));
        for (int i = 0; i < n; ++i) {
            if (digits[i] == 0) continue;
            for (int t = 0; t < n; ++t) pi[t] += digits[i] * P.lattice.at(i, t);
        }
        bool ok = true;
        for (size_t j = 0; j < ideals.size() && ok; ++j) {
            if (j == idx) continue;
            if (ideals[j].contains(pi)) ok = false;
        }
        if (ok && P.e >= 2) {
            std::vector<Int> sol;
            if (solve_staircase(squares[idx], pi, sol)) ok = false;
        }
        if (ok) {
            P.second_generator = std::move(pi);
            return;
        }
    }
    throw InternalError("no second generator found");
}

} // namespace

SplittingData split_prime(const NumberField& K, const Int& p) {
    if (!is_prime(p)) throw CompositeModulusError("prime splitting requires a prime modulus");
    SplittingData s;
    s.p = p;
    s.order = p_maximal_order(K, p);
    s.index_val = index_valuation(s.order);
    const OrderBasis& o = s.order;
    const int n = o.n;

    // Start the separation from the radical of pO.
    IntMat rad = mat_mod(p_radical(o), p);
    std::vector<size_t> pivots;
    const size_t rank = rref_mod_p(rad, p, &pivots);
    IntMat jb(rank, n);
    for (size_t r = 0; r < rank; ++r) jb.set_row(r, rad.row(r));
    pivots.resize(rank);

    QuotientAlg top;
    top.o = &o;
    top.p = p;
    top.jbasis = std::move(jb);
    top.jpivots = std::move(pivots);
    top.index_columns();

    DetRng rng;
    std::vector<LeafIdeal> leaves;
    split_quotient(top, rng, leaves, 0);

    // Build lattices, then ramification indices via powers.
    std::vector<IntMat> squares;
    int efsum = 0;
    for (const LeafIdeal& leaf : leaves) {
        PrimeIdealData P;
        P.p = p;
        P.f = leaf.f;
        P.lattice = lattice_from_mod_p_basis(leaf.jbasis, n, p);
        const std::vector<Int> pvec = o.integer_coords(p);
        IntMat power = ideal_product(o, P.lattice, P.lattice);
        squares.push_back(power);
        P.e = 1;
        std::vector<Int> sol;
        while (solve_staircase(power, pvec, sol)) {
            ++P.e;
            if (P.e > n) throw InternalError("ramification index exceeded the degree");
            power = ideal_product(o, power, P.lattice);
        }
        efsum += P.e * P.f;
        s.ideals.push_back(std::move(P));
    }
    if (efsum != n) throw InternalError("splitting does not satisfy sum(e*f) = degree");

    for (size_t i = 0; i < s.ideals.size(); ++i) attach_second_generator(o, s.ideals, i, squares);
    for (PrimeIdealData& P : s.ideals) attach_residue_field(o, P);

    std::sort(s.ideals.begin(), s.ideals.end(),
              [](const PrimeIdealData& a, const PrimeIdealData& b) {
                  if (a.f != b.f) return a.f < b.f;
                  if (a.e != b.e) return a.e < b.e;
                  return a.second_generator < b.second_generator;
              });
    return s;
}

long index_valuation(const NumberField& K, const Int& p) {
    if (dedekind_p_maximal(K, p).first) return 0;
    return index_valuation(p_maximal_order(K, p));
}

bool is_common_index_divisor(const SplittingData& s) {
    std::vector<int> degrees;
    for (const PrimeIdealData& d : s.ideals) degrees.push_back(d.f);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int f : degrees) {
        const Int count = s.degree_count(f);
        if (count > count_monic_irreducible(s.p, static_cast<unsigned>(f))) return true;
    }
    return false;
}

} // namespace ringcover
