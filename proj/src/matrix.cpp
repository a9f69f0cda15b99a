#include "ringcover/matrix.hpp"

#include <algorithm>

#include "ringcover/errors.hpp"

namespace ringcover {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMat::row(size_t r) const {
    std::vector<Int> v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void IntMat::set_row(size_t r, const std::vector<Int>& v) {
    if (v.size() != cols_) throw InternalError("set_row: size mismatch");
    for (size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

IntMat from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

IntMat stack(const IntMat& top, const IntMat& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw InternalError("stack: column mismatch");
    IntMat m(top.rows() + bottom.rows(), top.cols());
    for (size_t r = 0; r < top.rows(); ++r)
        for (size_t c = 0; c < top.cols(); ++c) m.at(r, c) = top.at(r, c);
    for (size_t r = 0; r < bottom.rows(); ++r)
        for (size_t c = 0; c < top.cols(); ++c) m.at(top.rows() + r, c) = bottom.at(r, c);
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw InternalError("mat_mul: shape mismatch");
    IntMat m(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

IntMat mat_scale(const IntMat& a, const Int& c) {
    IntMat m = a;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= c;
    return m;
}

std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMat& m) {
    if (v.size() != m.rows()) throw InternalError("vec_mat: shape mismatch");
    std::vector<Int> out(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m.at(r, c);
    }
    return out;
}

Int det_bareiss(IntMat m) {
    if (m.rows() != m.cols()) throw InternalError("det: not square");
    size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

struct WorkRow {
    std::vector<Int> v;
    std::vector<Int> u; // transform over original rows (may be empty)
};

void row_axpy(WorkRow& dst, const Int& q, const WorkRow& src) {
    for (size_t c = 0; c < dst.v.size(); ++c) dst.v[c] -= q * src.v[c];
    for (size_t c = 0; c < dst.u.size(); ++c) dst.u[c] -= q * src.u[c];
}

void row_negate(WorkRow& r) {
    for (auto& x : r.v) x = -x;
    for (auto& x : r.u) x = -x;
}

IntMat hnf_lower_impl(const IntMat& m, IntMat* U) {
    size_t nr = m.rows(), nc = m.cols();
    std::vector<WorkRow> active(nr);
    for (size_t r = 0; r < nr; ++r) {
        active[r].v = m.row(r);
        if (U) {
            active[r].u.assign(nr, 0);
            active[r].u[r] = 1;
        }
    }
    // Pivot search from the last column down; a pivot row keeps entries only
    // in columns <= its pivot column.
    std::vector<std::pair<size_t, WorkRow>> pivots;
    for (size_t cc = nc; cc-- > 0;) {
        for (;;) {
            // Reducer: the active row with the smallest nonzero |entry| at cc.
            size_t best = nr, count = 0;
            for (size_t i = 0; i < active.size(); ++i) {
                if (active[i].v[cc] == 0) continue;
                ++count;
                if (best == nr || cmp(abs(active[i].v[cc]), abs(active[best].v[cc])) < 0)
                    best = i;
            }
            if (count == 0) break;
            if (active[best].v[cc] < 0) row_negate(active[best]);
            if (count == 1) {
                pivots.emplace_back(cc, std::move(active[best]));
                active.erase(active.begin() + static_cast<long>(best));
                break;
            }
            for (size_t i = 0; i < active.size(); ++i) {
                if (i == best || active[i].v[cc] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), active[i].v[cc].get_mpz_t(),
                           active[best].v[cc].get_mpz_t());
                row_axpy(active[i], q, active[best]);
            }
        }
    }
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Reduce, for each row, the entries in the pivot columns of earlier rows
    // into [0, pivot).  Working from the nearest earlier pivot downwards
    // keeps already-reduced columns intact.
    for (size_t j = 0; j < pivots.size(); ++j) {
        for (size_t i = j; i-- > 0;) {
            size_t col = pivots[i].first;
            const Int& piv = pivots[i].second.v[col];
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), pivots[j].second.v[col].get_mpz_t(), piv.get_mpz_t());
            if (q != 0) row_axpy(pivots[j].second, q, pivots[i].second);
        }
    }
    IntMat h(pivots.size(), nc);
    for (size_t r = 0; r < pivots.size(); ++r) h.set_row(r, pivots[r].second.v);
    if (U) {
        *U = IntMat(pivots.size(), nr);
        for (size_t r = 0; r < pivots.size(); ++r)
            for (size_t c = 0; c < nr; ++c) U->at(r, c) = pivots[r].second.u[c];
    }
    return h;
}

} // namespace

IntMat hnf_lower(IntMat m) { return hnf_lower_impl(m, nullptr); }

IntMat hnf_lower_transform(const IntMat& m, IntMat* U) { return hnf_lower_impl(m, U); }

bool solve_staircase(const IntMat& H, const std::vector<Int>& v, std::vector<Int>& x) {
    size_t n = H.rows();
    if (H.cols() != n || v.size() != n) throw InternalError("solve_staircase: shape");
    x.assign(n, 0);
    for (size_t c = n; c-- > 0;) {
        Int acc = v[c];
        for (size_t r = c + 1; r < n; ++r) acc -= x[r] * H.at(r, c);
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), H.at(c, c).get_mpz_t());
        if (rem != 0) return false;
        x[c] = q;
    }
    return true;
}

std::vector<Int> reduce_mod_lattice(const IntMat& H, std::vector<Int> v) {
    size_t n = H.rows();
    if (H.cols() != n || v.size() != n) throw InternalError("reduce_mod_lattice: shape");
    for (size_t i = n; i-- > 0;) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), H.at(i, i).get_mpz_t());
        if (q == 0) continue;
        for (size_t c = 0; c <= i; ++c) v[c] -= q * H.at(i, c);
    }
    return v;
}

IntMat mat_mod(IntMat m, const Int& p) {
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = mod_floor(m.at(r, c), p);
    return m;
}

IntMat mat_mul_mod(const IntMat& a, const IntMat& b, const Int& p) {
    return mat_mod(mat_mul(a, b), p);
}

IntMat mat_pow_mod(IntMat m, unsigned long e, const Int& p) {
    if (m.rows() != m.cols()) throw InternalError("mat_pow_mod: not square");
    IntMat r = IntMat::identity(m.rows());
    while (e > 0) {
        if (e & 1) r = mat_mul_mod(r, m, p);
        e >>= 1;
        if (e > 0) m = mat_mul_mod(m, m, p);
    }
    return r;
}

size_t rref_mod_p(IntMat& m, const Int& p, std::vector<size_t>* pivots) {
    if (pivots) pivots->clear();
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t piv = rank;
        while (piv < m.rows() && mod_floor(m.at(piv, col), p) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(rank, c));
        Int inv = mod_inverse(mod_floor(m.at(rank, col), p), p);
        for (size_t c = 0; c < m.cols(); ++c) m.at(rank, c) = mod_floor(m.at(rank, c) * inv, p);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            Int f = mod_floor(m.at(r, col), p);
            if (f == 0) continue;
            for (size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = mod_floor(m.at(r, c) - f * m.at(rank, c), p);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

namespace {

// Right kernel {x : a * x == 0 mod p}, solutions returned as rows.
IntMat right_kernel_mod_p(IntMat a, const Int& p) {
    std::vector<size_t> pivots;
    size_t rank = rref_mod_p(a, p, &pivots);
    size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    IntMat out(n - rank, n);
    size_t k = 0;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        out.at(k, fc) = 1;
        for (size_t i = 0; i < rank; ++i)
            out.at(k, pivots[i]) = mod_floor(-a.at(i, fc), p);
        ++k;
    }
    return out;
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

} // namespace

IntMat left_kernel_mod_p(const IntMat& m, const Int& p) {
    return right_kernel_mod_p(transpose(m), p);
}

bool express_in_rowspan_mod_p(const IntMat& rref, const std::vector<size_t>& pivots,
                              std::vector<Int> v, const Int& p, std::vector<Int>* coords) {
    if (coords) coords->assign(rref.rows(), 0);
    for (size_t c = 0; c < v.size(); ++c) v[c] = mod_floor(v[c], p);
    for (size_t i = 0; i < pivots.size(); ++i) {
        Int f = v[pivots[i]];
        if (coords) (*coords)[i] = f;
        if (f == 0) continue;
        for (size_t c = 0; c < v.size(); ++c)
            v[c] = mod_floor(v[c] - f * rref.at(i, c), p);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace ringcover
