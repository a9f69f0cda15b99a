#include "ringcover/coverability.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ringcover/errors.hpp"
#include "ringcover/order.hpp"

namespace ringcover {

FaultyResult is_faulty(const std::vector<IdealSpecEntry>& spec) {
    std::map<std::pair<Int, int>, int> counts;
    for (const IdealSpecEntry& e : spec) ++counts[{e.p, e.f}];
    for (const auto& [key, count] : counts) {
        const auto& [p, f] = key;
        if (covering_threshold(p, static_cast<unsigned>(f)) <= count)
            return {true, p, f};
    }
    return {false, 0, 0};
}

bool sigma_less(const SigmaValue& a, const SigmaValue& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.kind == SigmaKind::Finite) return a.m < b.m;
    return false;
}

std::string sigma_to_string(const SigmaValue& v) {
    switch (v.kind) {
    case SigmaKind::Finite: return v.m.get_str();
    case SigmaKind::Infinite: return "infinite";
    case SigmaKind::InfiniteOrNotCoverable: return "infinite_or_not_coverable";
    case SigmaKind::NotCoverable: return "not_coverable";
    }
    throw InternalError("unknown sigma kind");
}

Int sigma_formula(const Int& p, unsigned f) {
    const Int tau = covering_threshold(p, f);
    const Int pairs = tau * (tau - 1) / 2;
    const Int w = (f == 1) ? Int(1) : Int(distinct_prime_factor_count(f));
    return Int(f) * pairs + tau * w;
}

std::vector<Int> compute_P_set(const std::vector<SplittingData>& splittings) {
    std::vector<Int> out;
    for (const SplittingData& s : splittings) {
        if (is_common_index_divisor(s) || Int(s.degree_count(1)) >= s.p) out.push_back(s.p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<unsigned> compute_F_set(const SplittingData& s) {
    std::vector<int> degrees;
    for (const PrimeIdealData& d : s.ideals) degrees.push_back(d.f);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::vector<unsigned> out;
    for (int f : degrees) {
        if (Int(s.degree_count(f)) >= covering_threshold(s.p, static_cast<unsigned>(f)))
            out.push_back(static_cast<unsigned>(f));
    }
    if (out.empty())
        throw EmptyFSetError("no residual degree qualifies for p = " + s.p.get_str());
    return out;
}

SigmaWitness sigma_A(const std::vector<SplittingData>& splittings) {
    const std::vector<Int> pset = compute_P_set(splittings);
    if (pset.empty()) return {SigmaValue::undecided(), 0, 0};

    SigmaWitness best{SigmaValue::undecided(), 0, 0};
    bool have = false;
    for (const SplittingData& s : splittings) {
        if (std::find(pset.begin(), pset.end(), s.p) == pset.end()) continue;
        for (unsigned f : compute_F_set(s)) {
            const SigmaValue candidate = SigmaValue::finite(sigma_formula(s.p, f));
            if (!have || sigma_less(candidate, best.sigma)) {
                best = {candidate, s.p, f};
                have = true;
            }
        }
    }
    if (!have) throw InternalError("nonempty P-set produced no finite sigma candidate");
    return best;
}

bool finitely_coverable(const std::vector<SplittingData>& splittings) {
    return !compute_P_set(splittings).empty();
}

std::vector<MaxSubringDescriptor> enumerate_max_subrings(const std::vector<RingComponent>& comps) {
    if (comps.empty()) return {};
    for (const RingComponent& c : comps)
        if (c.p != comps[0].p)
            throw MixedPrimesError("components must share one characteristic");

    std::vector<MaxSubringDescriptor> out;
    for (size_t i = 0; i < comps.size(); ++i) {
        MaxSubringDescriptor d;
        d.i = static_cast<int>(i);
        if (comps[i].f == 1) {
            d.kind = MaxSubringDescriptor::Kind::ZeroSubfield;
            out.push_back(d);
        } else {
            d.kind = MaxSubringDescriptor::Kind::Subfield;
            for (long l : distinct_prime_divisors(static_cast<long>(comps[i].f))) {
                d.subfield_prime = static_cast<unsigned>(l);
                out.push_back(d);
            }
        }
        if (comps[i].k >= 3) {
            MaxSubringDescriptor x;
            x.kind = MaxSubringDescriptor::Kind::Exceptional;
            x.i = static_cast<int>(i);
            out.push_back(x);
        }
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = i + 1; j < comps.size(); ++j) {
            if (comps[i].f != comps[j].f) continue;
            MaxSubringDescriptor d;
            d.kind = MaxSubringDescriptor::Kind::TwistedDiagonal;
            d.i = static_cast<int>(i);
            d.j = static_cast<int>(j);
            for (unsigned t = 0; t < comps[i].f; ++t) {
                d.frobenius = t;
                out.push_back(d);
            }
        }
    }
    return out;
}

GeneratorCheck generator_test(const SplittingData& s, const std::vector<Int>& elem,
                              const std::vector<QuotientTarget>& targets, int bound_cap) {
    std::vector<PolyModP> minpolys;
    for (const QuotientTarget& t : targets) {
        const PrimeIdealData& P = s.ideals[t.ideal_index];
        const PolyModP res = P.residue(elem);
        if (res.is_zero())
            return {false, 1, static_cast<int>(t.ideal_index), -1};
        const PolyModP irr = P.residue_min_poly(elem);
        if (irr.degree() != P.f)
            return {false, 1, static_cast<int>(t.ideal_index), -1};
        minpolys.push_back(irr);
    }
    for (size_t a = 0; a < targets.size(); ++a) {
        for (size_t b = a + 1; b < targets.size(); ++b) {
            if (minpolys[a] == minpolys[b])
                return {false, 2, static_cast<int>(targets[a].ideal_index),
                        static_cast<int>(targets[b].ideal_index)};
        }
    }
    for (size_t a = 0; a < targets.size(); ++a) {
        const PrimeIdealData& P = s.ideals[targets[a].ideal_index];
        if (P.e < 2 || targets[a].h < 2) continue;
        // Horner evaluation of the lifted minimal polynomial at elem; the
        // coordinate-0 shift adds the constant because omega_0 = 1.
        const PolyInt lifted = minpolys[a].lift();
        std::vector<Int> acc = s.order.integer_coords(0);
        for (int k = lifted.degree(); k >= 0; --k) {
            acc = s.order.mul(acc, elem);
            acc[0] += lifted.coeff(k);
        }
        if (in_ideal_power(s.order, P, acc, 2, bound_cap))
            return {false, 3, static_cast<int>(targets[a].ideal_index), -1};
    }
    return {true, 0, -1, -1};
}

namespace {

// Advance a base-p odometer (slot 0 fastest); false once every slot wrapped.
bool next_tuple(std::vector<Int>& digits, const Int& p) {
    for (Int& d : digits) {
        d += 1;
        if (d < p) return true;
        d = 0;
    }
    return false;
}

PolyModP eval_poly_in_ext(const PolyModP& g, const PolyModP& x, const PolyModP& mod) {
    const Int& p = mod.modulus();
    PolyModP acc = PolyModP::zero(p);
    for (int k = g.degree(); k >= 0; --k) {
        acc = (acc * x).mod(mod);
        acc = acc + PolyModP(p, {g.coeff(k)});
    }
    return acc;
}

} // namespace

PolyModP diagonal_image_of_generator(const PrimeIdealData& pi, const PrimeIdealData& pj,
                                     unsigned t) {
    if (pi.f != pj.f) throw InternalError("diagonal between unequal residual degrees");
    const Int& p = pi.p;
    const unsigned f = static_cast<unsigned>(pi.f);
    if (int_pow(p, f) > 4096)
        throw SizeBoundError("residue field too large for diagonal construction");

    // Locate one root of P_i's minimal polynomial in P_j's presentation.
    const PolyModP& target = pj.res_min_poly;
    PolyModP root;
    bool found = false;
    std::vector<Int> digits(f, Int(0));
    while (true) {
        std::vector<Int> coeffs(digits);
        const PolyModP cand(p, std::move(coeffs));
        if (eval_poly_in_ext(pi.res_min_poly, cand, target).is_zero()) {
            root = cand;
            found = true;
            break;
        }
        if (!next_tuple(digits, p)) break;
    }
    if (!found) throw InternalError("minimal polynomial has no root in the partner field");

    // The full root set is the Frobenius orbit; canonicalise to its least
    // member, then apply Frobenius^t.
    PolyModP least = root;
    PolyModP orbit = root;
    for (unsigned k = 1; k < f; ++k) {
        orbit = poly_pow_mod(orbit, p, target);
        if (poly_order_less(orbit, least)) least = orbit;
    }
    return poly_pow_mod(least, int_pow(p, t), target);
}

std::vector<Int> diagonal_mu(const OrderBasis& order, const PrimeIdealData& pi,
                             const PrimeIdealData& pj, unsigned t) {
    if (pi.f == 1) return order.integer_coords(1);
    const PolyModP beta = diagonal_image_of_generator(pi, pj, t);
    const std::vector<Int> u = idempotent_split(order, pi.lattice, pj.lattice);
    const std::vector<Int> a = pi.res_generator;
    const std::vector<Int> b = pj.lift_residue(beta);
    std::vector<Int> one_minus_u = order.integer_coords(1);
    for (int k = 0; k < order.n; ++k) one_minus_u[k] -= u[k];
    const std::vector<Int> left = order.mul(a, one_minus_u);
    const std::vector<Int> right = order.mul(b, u);
    std::vector<Int> mu(order.n);
    for (int k = 0; k < order.n; ++k) mu[k] = left[k] + right[k];
    return reduce_mod_lattice(ideal_product(order, pi.lattice, pj.lattice), std::move(mu));
}

CoverReport build_cover_report(const NumberField& K, long prime_cap) {
    CoverReport r;
    r.poly = K.poly();
    r.degree = K.degree();
    r.disc = K.discriminant();

    long cap = prime_cap > 0 ? prime_cap : K.degree();
    if (cap < 2) cap = 2;
    for (long p : primes_upto(cap)) r.splittings.push_back(split_prime(K, Int(p)));

    r.P_set = compute_P_set(r.splittings);
    for (const SplittingData& s : r.splittings) {
        if (std::find(r.P_set.begin(), r.P_set.end(), s.p) == r.P_set.end()) continue;
        r.F_sets.emplace_back(s.p, compute_F_set(s));
    }
    r.sigma = sigma_A(r.splittings);

    if (r.sigma.sigma.kind != SigmaKind::Finite) {
        r.classification = "not_finitely_coverable_undecided";
        return r;
    }
    r.classification = "finitely_coverable";

    const SplittingData* witness = nullptr;
    for (const SplittingData& s : r.splittings)
        if (s.p == r.sigma.p) witness = &s;
    if (!witness) throw InternalError("witness prime has no splitting");

    CoveringDescription cov;
    cov.p = r.sigma.p;
    cov.f = r.sigma.f;
    cov.count = sigma_formula(r.sigma.p, r.sigma.f);
    const long tau = to_long(covering_threshold(r.sigma.p, r.sigma.f));
    for (size_t i = 0; i < witness->ideals.size(); ++i) {
        if (witness->ideals[i].f == static_cast<int>(r.sigma.f))
            cov.ideal_indices.push_back(i);
        if (cov.ideal_indices.size() == static_cast<size_t>(tau)) break;
    }
    if (cov.ideal_indices.size() != static_cast<size_t>(tau))
        throw InternalError("witness degree has fewer ideals than the threshold");

    for (size_t idx : cov.ideal_indices) {
        if (r.sigma.f == 1) {
            CoverLift lift;
            lift.kind = CoverLift::Kind::Ideal;
            lift.i = idx;
            cov.lifts.push_back(std::move(lift));
        } else {
            for (long l : distinct_prime_divisors(static_cast<long>(r.sigma.f))) {
                CoverLift lift;
                lift.kind = CoverLift::Kind::Subfield;
                lift.i = idx;
                lift.subfield_prime = static_cast<unsigned>(l);
                cov.lifts.push_back(std::move(lift));
            }
        }
    }
    for (size_t a = 0; a < cov.ideal_indices.size(); ++a) {
        for (size_t b = a + 1; b < cov.ideal_indices.size(); ++b) {
            const size_t ia = cov.ideal_indices[a], ib = cov.ideal_indices[b];
            for (unsigned t = 0; t < r.sigma.f; ++t) {
                CoverLift lift;
                lift.kind = CoverLift::Kind::Diagonal;
                lift.i = ia;
                lift.j = ib;
                lift.frobenius = t;
                lift.mu = diagonal_mu(witness->order, witness->ideals[ia], witness->ideals[ib], t);
                cov.lifts.push_back(std::move(lift));
            }
        }
    }
    if (Int(cov.lifts.size()) != cov.count)
        throw InternalError("covering size disagrees with the counting formula");
    r.covering = std::move(cov);
    r.has_covering = true;
    return r;
}

} // namespace ringcover
