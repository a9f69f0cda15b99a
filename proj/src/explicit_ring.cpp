#include "ringcover/explicit_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include <json.hpp>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

// Structure tables for one field F_p[x]/(m), elements indexed by base-p
// digit strings of their coefficient vectors (constant digit fastest).
struct FieldTables {
    long p = 0;
    unsigned f = 0;
    long q = 0;
    std::vector<uint16_t> add, mul;

    std::vector<long> decompose(long idx) const {
        std::vector<long> c(f);
        for (unsigned k = 0; k < f; ++k) {
            c[k] = idx % p;
            idx /= p;
        }
        return c;
    }
    long compose(const std::vector<long>& c) const {
        long idx = 0;
        for (unsigned k = f; k-- > 0;) idx = idx * p + c[k];
        return idx;
    }
};

FieldTables build_field_tables(const PolyModP& minpoly) {
    FieldTables t;
    t.p = to_long(minpoly.modulus());
    t.f = static_cast<unsigned>(minpoly.degree());
    t.q = 1;
    for (unsigned k = 0; k < t.f; ++k) t.q *= t.p;

    std::vector<long> m(t.f);
    for (unsigned k = 0; k < t.f; ++k) m[k] = to_long(minpoly.coeff(k));

    t.add.resize(static_cast<size_t>(t.q) * t.q);
    t.mul.resize(static_cast<size_t>(t.q) * t.q);
    std::vector<std::vector<long>> elems(t.q);
    for (long a = 0; a < t.q; ++a) elems[a] = t.decompose(a);

    std::vector<long> prod(2 * t.f, 0);
    for (long a = 0; a < t.q; ++a) {
        for (long b = a; b < t.q; ++b) {
            std::vector<long> sum(t.f);
            for (unsigned k = 0; k < t.f; ++k) sum[k] = (elems[a][k] + elems[b][k]) % t.p;
            const uint16_t s = static_cast<uint16_t>(t.compose(sum));
            t.add[static_cast<size_t>(a) * t.q + b] = s;
            t.add[static_cast<size_t>(b) * t.q + a] = s;

            std::fill(prod.begin(), prod.end(), 0);
            for (unsigned i = 0; i < t.f; ++i) {
                if (elems[a][i] == 0) continue;
                for (unsigned j = 0; j < t.f; ++j)
                    prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % t.p;
            }
            for (unsigned d = 2 * t.f - 1; d >= t.f; --d) {
                const long c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (unsigned k = 0; k < t.f; ++k)
                    prod[d - t.f + k] = ((prod[d - t.f + k] - c * m[k]) % t.p + t.p) % t.p;
            }
            std::vector<long> red(prod.begin(), prod.begin() + t.f);
            const uint16_t pr = static_cast<uint16_t>(t.compose(red));
            t.mul[static_cast<size_t>(a) * t.q + b] = pr;
            t.mul[static_cast<size_t>(b) * t.q + a] = pr;
        }
    }
    return t;
}

std::string field_label(const FieldTables& t, long idx) {
    const std::vector<long> c = t.decompose(idx);
    std::vector<Int> coeffs(c.size());
    for (size_t k = 0; k < c.size(); ++k) coeffs[k] = c[k];
    return PolyModP(Int(t.p), std::move(coeffs)).to_string();
}

// Derive zero, negation table and characteristic; structural failures throw.
void finalize_ring(ExplicitRing& r) {
    const size_t n = r.size;
    if (n == 0 || r.labels.size() != n || r.add.size() != n * n || r.mul.size() != n * n)
        throw InvalidRingTablesError("table dimensions do not match the element count");
    for (size_t v : r.add)
        if (v >= n) throw InvalidRingTablesError("addition table entry out of range");
    for (size_t v : r.mul)
        if (v >= n) throw InvalidRingTablesError("multiplication table entry out of range");

    bool found = false;
    for (size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a)
            if (r.plus(e, a) != a) ok = false;
        if (ok) {
            r.zero = e;
            found = true;
        }
    }
    if (!found) throw InvalidRingTablesError("no additive identity");

    r.neg.assign(n, 0);
    for (size_t a = 0; a < n; ++a) {
        bool ok = false;
        for (size_t b = 0; b < n; ++b) {
            if (r.plus(a, b) == r.zero) {
                r.neg[a] = static_cast<uint16_t>(b);
                ok = true;
                break;
            }
        }
        if (!ok) throw InvalidRingTablesError("element without additive inverse");
    }

    Int exponent = 1;
    for (size_t a = 0; a < n; ++a) {
        size_t acc = a;
        Int ord = 1;
        while (acc != r.zero) {
            acc = r.plus(acc, a);
            ord += 1;
        }
        Int g;
        mpz_lcm(g.get_mpz_t(), exponent.get_mpz_t(), ord.get_mpz_t());
        exponent = g;
    }
    r.characteristic = exponent;
}

} // namespace

size_t ExplicitRing::component_of(size_t elem, size_t comp) const {
    size_t idx = elem;
    for (size_t c = 0; c < comp; ++c) idx /= to_long(int_pow(components[c].first, components[c].second));
    return idx % to_long(int_pow(components[comp].first, components[comp].second));
}

size_t ExplicitRing::with_component(size_t elem, size_t comp, size_t value) const {
    size_t radix = 1;
    for (size_t c = 0; c < comp; ++c) radix *= to_long(int_pow(components[c].first, components[c].second));
    const size_t q = to_long(int_pow(components[comp].first, components[comp].second));
    const size_t old = (elem / radix) % q;
    return elem + (value - old) * radix;
}

void ExplicitRing::validate() const {
    const size_t n = size;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (plus(a, b) != plus(b, a)) throw InvalidRingTablesError("addition not commutative");
            if (times(a, b) != times(b, a))
                throw InvalidRingTablesError("multiplication not commutative");
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                if (plus(plus(a, b), c) != plus(a, plus(b, c)))
                    throw InvalidRingTablesError("addition not associative");
                if (times(times(a, b), c) != times(a, times(b, c)))
                    throw InvalidRingTablesError("multiplication not associative");
                if (times(a, plus(b, c)) != plus(times(a, b), times(a, c)))
                    throw InvalidRingTablesError("multiplication not distributive");
            }
}

ExplicitRing product_of_fields(const Int& p, const std::vector<unsigned>& degrees,
                               size_t size_bound) {
    std::vector<PolyModP> minpolys;
    minpolys.reserve(degrees.size());
    for (unsigned f : degrees) minpolys.push_back(least_irreducible(p, f));
    return product_of_fields_with_minpolys(p, minpolys, size_bound);
}

ExplicitRing product_of_fields_with_minpolys(const Int& p, const std::vector<PolyModP>& minpolys,
                                             size_t size_bound) {
    if (!is_prime(p)) throw CompositeModulusError("field products need a prime characteristic");
    Int total = 1;
    for (const PolyModP& m : minpolys) total *= int_pow(p, static_cast<unsigned>(m.degree()));
    if (total > static_cast<long>(size_bound))
        throw SizeBoundError("product ring would have " + total.get_str() + " elements");

    std::vector<FieldTables> fields;
    fields.reserve(minpolys.size());
    for (const PolyModP& m : minpolys) fields.push_back(build_field_tables(m));

    ExplicitRing r;
    r.size = static_cast<size_t>(to_long(total));
    for (const PolyModP& m : minpolys) {
        r.components.emplace_back(p, static_cast<unsigned>(m.degree()));
        r.component_minpolys.push_back(m);
    }

    const size_t n = r.size;
    const size_t s = fields.size();
    std::vector<std::vector<size_t>> digits(n, std::vector<size_t>(s));
    for (size_t e = 0; e < n; ++e) {
        size_t idx = e;
        for (size_t c = 0; c < s; ++c) {
            digits[e][c] = idx % fields[c].q;
            idx /= fields[c].q;
        }
    }

    r.labels.resize(n);
    for (size_t e = 0; e < n; ++e) {
        std::string lab;
        if (s != 1) lab += "(";
        for (size_t c = 0; c < s; ++c) {
            if (c) lab += ",";
            lab += field_label(fields[c], static_cast<long>(digits[e][c]));
        }
        if (s != 1) lab += ")";
        r.labels[e] = std::move(lab);
    }

    r.add.resize(n * n);
    r.mul.resize(n * n);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a; b < n; ++b) {
            size_t sum = 0, prod = 0, radix = 1;
            for (size_t c = 0; c < s; ++c) {
                const FieldTables& ft = fields[c];
                sum += radix * ft.add[digits[a][c] * ft.q + digits[b][c]];
                prod += radix * ft.mul[digits[a][c] * ft.q + digits[b][c]];
                radix *= ft.q;
            }
            r.add[a * n + b] = r.add[b * n + a] = static_cast<uint16_t>(sum);
            r.mul[a * n + b] = r.mul[b * n + a] = static_cast<uint16_t>(prod);
        }
    }
    finalize_ring(r);
    if (n <= 100) r.validate();
    return r;
}

ExplicitRing ring_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidRingTablesError(std::string("ring file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j.contains("add") || !j.contains("mul"))
        throw InvalidRingTablesError("ring file needs \"labels\", \"add\" and \"mul\"");

    ExplicitRing r;
    try {
        r.labels = j.at("labels").get<std::vector<std::string>>();
        r.size = r.labels.size();
        if (r.size > 100) throw SizeBoundError("ingested rings are limited to 100 elements");
        const auto add = j.at("add").get<std::vector<std::vector<long>>>();
        const auto mul = j.at("mul").get<std::vector<std::vector<long>>>();
        if (add.size() != r.size || mul.size() != r.size)
            throw InvalidRingTablesError("table row count does not match the label count");
        for (size_t a = 0; a < r.size; ++a) {
            if (add[a].size() != r.size || mul[a].size() != r.size)
                throw InvalidRingTablesError("table row length does not match the label count");
            for (size_t b = 0; b < r.size; ++b) {
                if (add[a][b] < 0 || static_cast<size_t>(add[a][b]) >= r.size ||
                    mul[a][b] < 0 || static_cast<size_t>(mul[a][b]) >= r.size)
                    throw InvalidRingTablesError("table entry out of range");
                r.add.push_back(static_cast<uint16_t>(add[a][b]));
                r.mul.push_back(static_cast<uint16_t>(mul[a][b]));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidRingTablesError(std::string("ring file has a malformed field: ") + e.what());
    }
    finalize_ring(r);
    r.validate();
    return r;
}

size_t SubringSet::count() const {
    size_t c = 0;
    for (uint64_t w : bits) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
}

bool SubringSet::is_subset_of(const SubringSet& o) const {
    for (size_t k = 0; k < bits.size(); ++k)
        if (bits[k] & ~o.bits[k]) return false;
    return true;
}

std::vector<size_t> SubringSet::elements() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < universe; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

bool SubringSet::operator<(const SubringSet& o) const { return elements() < o.elements(); }

SubringSet closure(const ExplicitRing& r, const std::vector<size_t>& seed) {
    SubringSet s(r.size);
    std::vector<size_t> members;
    std::vector<size_t> queue;
    auto push = [&](size_t x) {
        if (!s.test(x)) {
            s.set(x);
            members.push_back(x);
            queue.push_back(x);
        }
    };
    push(r.zero);
    for (size_t x : seed) push(x);
    while (!queue.empty()) {
        const size_t x = queue.back();
        queue.pop_back();
        push(r.neg[x]);
        for (size_t idx = 0; idx < members.size(); ++idx) {
            const size_t y = members[idx];
            push(r.plus(x, y));
            push(r.times(x, y));
        }
    }
    return s;
}

bool is_coverable(const ExplicitRing& r) {
    for (size_t a = 0; a < r.size; ++a)
        if (closure(r, {a}).count() == r.size) return false;
    return true;
}

std::vector<SubringSet> enumerate_subrings(const ExplicitRing& r) {
    if (r.size > 100) throw SizeBoundError("subring enumeration is limited to 100 elements");
    std::set<SubringSet> known;
    std::vector<SubringSet> queue;
    const SubringSet base = closure(r, {});
    known.insert(base);
    queue.push_back(base);
    while (!queue.empty()) {
        const SubringSet s = queue.back();
        queue.pop_back();
        std::vector<size_t> gens = s.elements();
        gens.push_back(0); // slot for the new generator
        for (size_t x = 0; x < r.size; ++x) {
            if (s.test(x)) continue;
            gens.back() = x;
            SubringSet t = closure(r, gens);
            if (known.insert(t).second) queue.push_back(t);
        }
    }
    return {known.begin(), known.end()};
}

std::vector<SubringSet> maximal_subrings(const ExplicitRing& r) {
    const std::vector<SubringSet> all = enumerate_subrings(r);
    std::vector<SubringSet> out;
    for (const SubringSet& s : all) {
        if (s.count() == r.size) continue;
        bool maximal = true;
        for (const SubringSet& t : all) {
            if (t.count() == r.size || t == s) continue;
            if (s.is_subset_of(t)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool cover_dfs(const std::vector<SubringSet>& sets, const std::vector<SubringSet>& suffix_union,
               const SubringSet& full, size_t depth_left, size_t start, SubringSet covered,
               std::vector<size_t>& chosen) {
    if (covered == full) return true;
    if (depth_left == 0) return false;
    for (size_t i = start; i < sets.size(); ++i) {
        SubringSet reach = covered;
        for (size_t k = 0; k < reach.bits.size(); ++k) reach.bits[k] |= suffix_union[i].bits[k];
        if (!(reach == full)) return false; // no later suffix can help either
        SubringSet next = covered;
        for (size_t k = 0; k < next.bits.size(); ++k) next.bits[k] |= sets[i].bits[k];
        if (next == covered) continue; // adds nothing
        chosen.push_back(i);
        if (cover_dfs(sets, suffix_union, full, depth_left - 1, i + 1, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

SigmaValue covering_number_exact(const ExplicitRing& r, CoverSolution* solution) {
    if (r.size > 100) throw SizeBoundError("covering computation is limited to 100 elements");
    if (!is_coverable(r)) return SigmaValue::not_coverable();

    const std::vector<SubringSet> maxes = maximal_subrings(r);
    SubringSet full(r.size);
    for (size_t i = 0; i < r.size; ++i) full.set(i);

    std::vector<SubringSet> suffix(maxes.size() + 1, SubringSet(r.size));
    for (size_t i = maxes.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1];
        for (size_t k = 0; k < suffix[i].bits.size(); ++k) suffix[i].bits[k] |= maxes[i].bits[k];
    }

    for (size_t m = 2; m <= maxes.size(); ++m) {
        std::vector<size_t> chosen;
        if (cover_dfs(maxes, suffix, full, m, 0, SubringSet(r.size), chosen)) {
            if (solution) {
                solution->parts.clear();
                for (size_t i : chosen) solution->parts.push_back(maxes[i]);
                solution->minimal = true;
            }
            return SigmaValue::finite(static_cast<long>(chosen.size()));
        }
    }
    throw InternalError("coverable ring has no cover by maximal subrings");
}

namespace {

// Power of one component digit, computed through the product tables by
// placing the digit on an otherwise-zero element (products act
// componentwise, so the other slots stay zero and can be ignored).
size_t component_pow(const ExplicitRing& r, size_t comp, size_t base_digit, Int e) {
    const auto comp_mul = [&](size_t x, size_t y) {
        const size_t ex = r.with_component(0, comp, x);
        const size_t ey = r.with_component(0, comp, y);
        return r.component_of(r.times(ex, ey), comp);
    };
    size_t acc = 1; // digit of the constant polynomial 1
    size_t sq = base_digit;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = comp_mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = comp_mul(sq, sq);
    }
    return acc;
}

} // namespace

SubringSet realize_descriptor(const ExplicitRing& r, const MaxSubringDescriptor& d) {
    if (r.components.empty())
        throw InternalError("descriptor realization needs component metadata");
    SubringSet out(r.size);
    const size_t i = static_cast<size_t>(d.i);
    const Int& p = r.components[i].first;
    const unsigned f = r.components[i].second;

    switch (d.kind) {
    case MaxSubringDescriptor::Kind::ZeroSubfield: {
        if (f != 1) throw InternalError("zero subfield only applies to degree-1 components");
        for (size_t e = 0; e < r.size; ++e)
            if (r.component_of(e, i) == 0) out.set(e);
        return out;
    }
    case MaxSubringDescriptor::Kind::Subfield: {
        if (d.subfield_prime == 0 || f % d.subfield_prime != 0)
            throw InternalError("subfield index must divide the residual degree");
        const Int fix = int_pow(p, f / d.subfield_prime);
        for (size_t e = 0; e < r.size; ++e) {
            const size_t a = r.component_of(e, i);
            if (component_pow(r, i, a, fix) == a) out.set(e);
        }
        return out;
    }
    case MaxSubringDescriptor::Kind::Exceptional:
        throw InternalError("exceptional subrings need a local component with exponent >= 3");
    case MaxSubringDescriptor::Kind::TwistedDiagonal: {
        const size_t j = static_cast<size_t>(d.j);
        if (r.components[j].second != f)
            throw InternalError("twisted diagonal needs equal residual degrees");
        if (!(r.component_minpolys[i] == r.component_minpolys[j]))
            throw InternalError("twisted diagonal needs matching presentations");
        const Int shift = int_pow(p, d.frobenius);
        for (size_t e = 0; e < r.size; ++e) {
            const size_t a = r.component_of(e, i);
            const size_t b = r.component_of(e, j);
            if (component_pow(r, i, a, shift) == b) out.set(e);
        }
        return out;
    }
    }
    throw InternalError("unknown descriptor kind");
}

} // namespace ringcover
