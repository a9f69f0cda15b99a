#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ringcover/coverability.hpp"
#include "ringcover/errors.hpp"
#include "ringcover/explicit_ring.hpp"
#include "ringcover/number_field.hpp"
#include "ringcover/splitting.hpp"
#include "util.hpp"

using namespace ringcover;

namespace {

const char* kExamplePoly = "x^6+x^5+x^4-x^3+x^2+x+6";

NumberField field(const std::string& text) { return NumberField(PolyInt::parse(text)); }

IdealSpecEntry entry(long p, int f, int h = 1) {
    IdealSpecEntry e;
    e.p = p;
    e.f = f;
    e.h = h;
    return e;
}

// Does the residue tuple (indexed like cov.ideal_indices) lie in the part?
bool part_contains(const SplittingData& s, const CoveringDescription& cov, const CoverLift& lift,
                   const std::vector<PolyModP>& tuple) {
    auto pos = [&](size_t idx) {
        for (size_t k = 0; k < cov.ideal_indices.size(); ++k)
            if (cov.ideal_indices[k] == idx) return k;
        throw InternalError("lift points outside the covering's ideals");
    };
    switch (lift.kind) {
    case CoverLift::Kind::Ideal:
        return tuple[pos(lift.i)].is_zero();
    case CoverLift::Kind::Subfield: {
        const PrimeIdealData& P = s.ideals[lift.i];
        const PolyModP& r = tuple[pos(lift.i)];
        if (r.is_zero()) return true;
        const Int fix = int_pow(P.p, static_cast<unsigned>(P.f) / lift.subfield_prime);
        return poly_pow_mod(r, fix, P.res_min_poly) == r;
    }
    case CoverLift::Kind::Diagonal: {
        const PrimeIdealData& Pi = s.ideals[lift.i];
        const PrimeIdealData& Pj = s.ideals[lift.j];
        if (Pi.f == 1) return tuple[pos(lift.i)] == tuple[pos(lift.j)];
        const PolyModP beta = diagonal_image_of_generator(Pi, Pj, lift.frobenius);
        return testutil::eval_in_ext(tuple[pos(lift.i)], beta, Pj.res_min_poly) ==
               tuple[pos(lift.j)];
    }
    }
    return false;
}

// Exhaustive check that the attached covering covers the witness residue
// ring with proper parts, and that diagonal generators have the advertised
// residues.
void verify_covering(const CoverReport& r) {
    REQUIRE(r.has_covering);
    const SplittingData* s = nullptr;
    for (const SplittingData& cand : r.splittings)
        if (cand.p == r.covering.p) s = &cand;
    REQUIRE(s != nullptr);
    const CoveringDescription& cov = r.covering;
    CHECK(Int(cov.lifts.size()) == cov.count);
    CHECK(cov.count == sigma_formula(cov.p, cov.f));

    const long q = to_long(int_pow(cov.p, cov.f));
    const size_t parts = cov.lifts.size();
    const size_t slots = cov.ideal_indices.size();
    std::vector<bool> proper(parts, false);
    std::vector<long> digits(slots, 0);
    while (true) {
        std::vector<PolyModP> tuple;
        for (size_t k = 0; k < slots; ++k)
            tuple.push_back(testutil::residue_from_index(
                cov.p, s->ideals[cov.ideal_indices[k]].f, digits[k]));
        bool covered = false;
        for (size_t t = 0; t < parts; ++t) {
            if (part_contains(*s, cov, cov.lifts[t], tuple))
                covered = true;
            else
                proper[t] = true;
        }
        CHECK(covered);
        size_t k = 0;
        while (k < slots && ++digits[k] == q) digits[k++] = 0;
        if (k == slots) break;
    }
    for (size_t t = 0; t < parts; ++t) CHECK(proper[t]);

    for (const CoverLift& lift : cov.lifts) {
        if (lift.kind != CoverLift::Kind::Diagonal) continue;
        const PrimeIdealData& Pi = s->ideals[lift.i];
        const PrimeIdealData& Pj = s->ideals[lift.j];
        if (Pi.f == 1) {
            CHECK(Pi.residue(lift.mu) == Pj.residue(lift.mu));
        } else {
            CHECK(Pi.residue(lift.mu) == PolyModP(Pi.p, {Int(0), Int(1)})); // y itself
            CHECK(Pj.residue(lift.mu) ==
                  diagonal_image_of_generator(Pi, Pj, lift.frobenius));
        }
    }
}

} // namespace

TEST_CASE("faulty ideal detection") {
    FaultyResult r = is_faulty({entry(2, 1), entry(2, 1)});
    CHECK(r.faulty);
    CHECK(r.p == 2);
    CHECK(r.f == 1);

    r = is_faulty({entry(2, 2), entry(2, 2)});
    CHECK(r.faulty);
    CHECK(r.f == 2);

    CHECK_FALSE(is_faulty({entry(2, 1), entry(2, 2)}).faulty);
    CHECK_FALSE(is_faulty({entry(3, 1), entry(3, 1)}).faulty);
    CHECK(is_faulty({entry(3, 1), entry(3, 1), entry(3, 1)}).faulty);
    CHECK_FALSE(is_faulty({entry(3, 2), entry(3, 2), entry(3, 2)}).faulty); // tau_3(2) = 4
    CHECK(is_faulty({entry(3, 2), entry(3, 2), entry(3, 2), entry(3, 2)}).faulty);
    CHECK_FALSE(is_faulty({entry(2, 1, 5)}).faulty); // one ideal, any power
    CHECK_FALSE(is_faulty({}).faulty);

    // earliest witness in (p, f) order across primes
    r = is_faulty({entry(3, 1), entry(3, 1), entry(3, 1), entry(2, 2), entry(2, 2)});
    CHECK(r.faulty);
    CHECK(r.p == 2);
    CHECK(r.f == 2);
}

TEST_CASE("sigma values compare and print") {
    CHECK(sigma_less(SigmaValue::finite(3), SigmaValue::finite(4)));
    CHECK(sigma_less(SigmaValue::finite(100), SigmaValue::infinite()));
    CHECK(sigma_less(SigmaValue::infinite(), SigmaValue::undecided()));
    CHECK(sigma_less(SigmaValue::undecided(), SigmaValue::not_coverable()));
    CHECK_FALSE(sigma_less(SigmaValue::finite(4), SigmaValue::finite(4)));
    CHECK(sigma_to_string(SigmaValue::finite(3)) == "3");
    CHECK(sigma_to_string(SigmaValue::infinite()) == "infinite");
    CHECK(sigma_to_string(SigmaValue::undecided()) == "infinite_or_not_coverable");
    CHECK(sigma_to_string(SigmaValue::not_coverable()) == "not_coverable");
}

TEST_CASE("sigma formula") {
    CHECK(sigma_formula(2, 1) == 3);
    CHECK(sigma_formula(2, 2) == 4);
    CHECK(sigma_formula(3, 1) == 6);
    CHECK(sigma_formula(5, 1) == 15);
    CHECK(sigma_formula(2, 3) == 12);
    CHECK(sigma_formula(3, 2) == 16);
}

TEST_CASE("qualifying primes and degrees") {
    auto splittings = [](const char* poly, std::vector<long> ps) {
        const NumberField K = field(poly);
        std::vector<SplittingData> out;
        for (long p : ps) out.push_back(split_prime(K, p));
        return out;
    };

    const auto g = splittings(kExamplePoly, {2, 3, 5});
    CHECK(compute_P_set(g) == std::vector<Int>{Int(2)});
    CHECK(compute_F_set(g[0]) == std::vector<unsigned>{1, 2});

    CHECK(compute_P_set(splittings("x^2+1", {2})).empty());
    CHECK(compute_P_set(splittings("x^2-5", {2})).empty());
    CHECK_THROWS_AS(compute_F_set(split_prime(field("x^2+1"), 5)), EmptyFSetError);

    // at least p degree-1 ideals
    const auto small = splittings("x^2+x+2", {2});
    CHECK(compute_P_set(small) == std::vector<Int>{Int(2)});
    CHECK(compute_F_set(small[0]) == std::vector<unsigned>{1});

    // common index divisor without any degree-1 ideal
    const auto bi = splittings("x^4-44*x^2+144", {2, 3});
    CHECK(compute_P_set(bi) == std::vector<Int>{Int(2)});
    CHECK(compute_F_set(bi[0]) == std::vector<unsigned>{2});

    const auto dede = splittings("x^3-x^2-2*x-8", {2});
    CHECK(compute_P_set(dede) == std::vector<Int>{Int(2)});
    CHECK(compute_F_set(dede[0]) == std::vector<unsigned>{1});
}

TEST_CASE("sigma of the ring of integers") {
    auto sigma_of = [](const char* poly, std::vector<long> ps) {
        const NumberField K = field(poly);
        std::vector<SplittingData> out;
        for (long p : ps) out.push_back(split_prime(K, p));
        return sigma_A(out);
    };

    const SigmaWitness g = sigma_of(kExamplePoly, {2, 3, 5});
    CHECK(g.sigma == SigmaValue::finite(3));
    CHECK(g.p == 2);
    CHECK(g.f == 1);

    const SigmaWitness bi = sigma_of("x^4-44*x^2+144", {2, 3});
    CHECK(bi.sigma == SigmaValue::finite(4));
    CHECK(bi.p == 2);
    CHECK(bi.f == 2);

    CHECK(sigma_of("x^2+1", {2}).sigma == SigmaValue::undecided());
    CHECK(sigma_of("x^2-5", {2}).sigma == SigmaValue::undecided());
    CHECK(sigma_of("x^3-x^2-2*x-8", {2}).sigma == SigmaValue::finite(3));

    const NumberField K = field(kExamplePoly);
    CHECK(finitely_coverable({split_prime(K, 2)}));
    CHECK_FALSE(finitely_coverable({split_prime(field("x^2+1"), 2)}));
}

TEST_CASE("finite sigma equals the brute covering number of the witness ring") {
    for (const char* poly :
         {kExamplePoly, "x^4-44*x^2+144", "x^3-x^2-2*x-8", "x^2+x+2"}) {
        const NumberField K = field(poly);
        const CoverReport report = build_cover_report(K);
        REQUIRE(report.sigma.sigma.kind == SigmaKind::Finite);

        const SplittingData* witness = nullptr;
        for (const SplittingData& s : report.splittings)
            if (s.p == report.sigma.p) witness = &s;
        REQUIRE(witness != nullptr);

        std::vector<PolyModP> minpolys;
        for (const PrimeIdealData& P : witness->ideals)
            if (P.f == report.sigma.f) minpolys.push_back(P.res_min_poly);
        const ExplicitRing ring = product_of_fields_with_minpolys(report.sigma.p, minpolys);
        CHECK(covering_number_exact(ring) == report.sigma.sigma);
    }
}

TEST_CASE("adding an ideal entry never un-faults an ideal list") {
    std::mt19937 rng(424243);
    for (int trial = 0; trial < 200; ++trial) {
        const long p = std::vector<long>{2, 3, 5}[rng() % 3];
        std::vector<IdealSpecEntry> spec;
        const int count = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i)
            spec.push_back(entry(p, 1 + static_cast<int>(rng() % 3)));
        const bool before = is_faulty(spec).faulty;
        spec.push_back(entry(p, 1 + static_cast<int>(rng() % 3)));
        const bool after = is_faulty(spec).faulty;
        if (before) CHECK(after);
    }
}

TEST_CASE("qualifying primes never exceed the degree") {
    for (const char* poly : {kExamplePoly, "x^2+x+2", "x^2+1", "x^4-44*x^2+144"}) {
        const NumberField K = field(poly);
        for (const Int& p : build_cover_report(K).P_set) CHECK(p <= K.degree());
    }
}

TEST_CASE("maximal subring descriptors") {
    using K = MaxSubringDescriptor::Kind;

    const auto two_lines = enumerate_max_subrings({{2, 1, 1}, {2, 1, 1}});
    REQUIRE(two_lines.size() == 3);
    CHECK(two_lines[0].kind == K::ZeroSubfield);
    CHECK(two_lines[0].i == 0);
    CHECK(two_lines[1].kind == K::ZeroSubfield);
    CHECK(two_lines[1].i == 1);
    CHECK(two_lines[2].kind == K::TwistedDiagonal);
    CHECK(two_lines[2].i == 0);
    CHECK(two_lines[2].j == 1);
    CHECK(two_lines[2].frobenius == 0);

    const auto two_quads = enumerate_max_subrings({{2, 2, 1}, {2, 2, 1}});
    REQUIRE(two_quads.size() == 4);
    CHECK(two_quads[0].kind == K::Subfield);
    CHECK(two_quads[0].subfield_prime == 2);
    CHECK(two_quads[1].kind == K::Subfield);
    CHECK(two_quads[1].i == 1);
    CHECK(two_quads[2].kind == K::TwistedDiagonal);
    CHECK(two_quads[2].frobenius == 0);
    CHECK(two_quads[3].kind == K::TwistedDiagonal);
    CHECK(two_quads[3].frobenius == 1);

    const auto local = enumerate_max_subrings({{2, 2, 3}});
    REQUIRE(local.size() == 2);
    CHECK(local[0].kind == K::Subfield);
    CHECK(local[1].kind == K::Exceptional);

    CHECK(enumerate_max_subrings({{3, 1, 1}, {3, 1, 1}, {3, 1, 1}}).size() == 6);
    CHECK(enumerate_max_subrings({{2, 1, 1}, {2, 2, 1}}).size() == 2);
    CHECK(enumerate_max_subrings({{2, 6, 1}}).size() == 2); // subfields for l = 2, 3

    CHECK_THROWS_AS(enumerate_max_subrings({{2, 1, 1}, {3, 1, 1}}), MixedPrimesError);

    // tau copies of F_{p^f} have exactly sigma_formula(p, f) maximal subrings,
    // for every p <= 5 and f <= 3 where tau stays within 5 components
    for (long p : {2L, 3L, 5L}) {
        for (unsigned f = 1; f <= 3; ++f) {
            const Int tau = covering_threshold(p, f);
            if (tau > 5) continue;
            std::vector<RingComponent> comps;
            for (long i = 0; i < to_long(tau); ++i) comps.push_back({Int(p), f, 1});
            CHECK(Int(enumerate_max_subrings(comps).size()) == sigma_formula(p, f));
        }
    }
}

TEST_CASE("generator test against residue data") {
    // F_2 x F_2: no element generates
    const SplittingData s22 = split_prime(field("x^2+x+2"), 2);
    REQUIRE(s22.ideals.size() == 2);
    const std::vector<QuotientTarget> both{{0, 1}, {1, 1}};
    for (long a = 0; a < 2; ++a) {
        for (long b = 0; b < 2; ++b) {
            const std::vector<Int> x = testutil::crt_lift(
                s22, {0, 1},
                {testutil::residue_from_index(Int(2), 1, a),
                 testutil::residue_from_index(Int(2), 1, b)});
            const GeneratorCheck chk = generator_test(s22, x, both);
            CHECK_FALSE(chk.ok);
            if (a == 0 || b == 0)
                CHECK(chk.failed_condition == 1);
            else
                CHECK(chk.failed_condition == 2);
        }
    }

    // F_2 x F_4: exactly the elements (a, w) with w outside F_2 generate
    const SplittingData s24 = split_prime(field("x^3+x^2+x+2"), 2);
    REQUIRE(s24.ideals.size() == 2);
    REQUIRE(s24.ideals[0].f == 1);
    REQUIRE(s24.ideals[1].f == 2);
    int generators = 0;
    for (long a = 0; a < 2; ++a) {
        for (long b = 0; b < 4; ++b) {
            const std::vector<Int> x = testutil::crt_lift(
                s24, {0, 1},
                {testutil::residue_from_index(Int(2), 1, a),
                 testutil::residue_from_index(Int(2), 2, b)});
            const GeneratorCheck chk = generator_test(s24, x, both);
            const bool expect = a == 1 && b >= 2; // nonzero at P1, degree 2 at P2
            CHECK(chk.ok == expect);
            if (chk.ok) ++generators;
        }
    }
    CHECK(generators == 2); // w and w+1 paired with 1

    // ramified component with h = 2 exercises the depth condition
    const SplittingData s5 = split_prime(field("x^2-5"), 5);
    REQUIRE(s5.ideals.size() == 1);
    const std::vector<QuotientTarget> deep{{0, 2}};
    auto check_elem = [&](std::vector<long> coords, bool ok, int cond) {
        const GeneratorCheck chk =
            generator_test(s5, std::vector<Int>(coords.begin(), coords.end()), deep);
        CHECK(chk.ok == ok);
        if (!ok) CHECK(chk.failed_condition == cond);
    };
    check_elem({1, 1}, true, 0);  // 1 + sqrt5
    check_elem({2, 1}, true, 0);  // 2 + sqrt5
    check_elem({0, 1}, false, 1); // sqrt5 reduces to zero
    check_elem({6, 0}, false, 3); // 6 - 1 = 5 sits in P^2
    check_elem({1, 5}, false, 3); // 1 + 5 sqrt5

    // the same elements pass when only the residue field is required
    const std::vector<QuotientTarget> shallow{{0, 1}};
    CHECK(generator_test(s5, std::vector<Int>{Int(6), Int(0)}, shallow).ok);
}

TEST_CASE("twisted diagonal data") {
    const SplittingData s = split_prime(field(kExamplePoly), 2);
    REQUIRE(s.ideals.size() == 4);
    const PrimeIdealData& Pi = s.ideals[2]; // degree 2
    const PrimeIdealData& Pj = s.ideals[3];

    const PolyModP beta0 = diagonal_image_of_generator(Pi, Pj, 0);
    // beta0 is a root of Pi's minimal polynomial inside Pj's presentation
    CHECK(testutil::eval_in_ext(Pi.res_min_poly, beta0, Pj.res_min_poly).is_zero());
    const PolyModP beta1 = diagonal_image_of_generator(Pi, Pj, 1);
    CHECK(beta1 == poly_pow_mod(beta0, Int(2), Pj.res_min_poly));
    CHECK_FALSE(beta0 == beta1); // distinct twists of a degree-2 generator

    for (unsigned t = 0; t < 2; ++t) {
        const std::vector<Int> mu = diagonal_mu(s.order, Pi, Pj, t);
        CHECK(Pi.residue(mu) == PolyModP(2, {Int(0), Int(1)}));
        CHECK(Pj.residue(mu) == diagonal_image_of_generator(Pi, Pj, t));
    }

    // degree-1 pair: mu is the constant 1
    const std::vector<Int> mu1 = diagonal_mu(s.order, s.ideals[0], s.ideals[1], 0);
    CHECK(mu1 == s.order.integer_coords(1));
}

TEST_CASE("full report on the running example") {
    const CoverReport r = build_cover_report(field(kExamplePoly));
    CHECK(r.degree == 6);
    REQUIRE(r.splittings.size() == 3); // p = 2, 3, 5
    CHECK(r.splittings[0].p == 2);
    CHECK(r.splittings[2].p == 5);
    CHECK(r.P_set == std::vector<Int>{Int(2)});
    REQUIRE(r.F_sets.size() == 1);
    CHECK(r.F_sets[0].first == 2);
    CHECK(r.F_sets[0].second == std::vector<unsigned>{1, 2});
    CHECK(r.sigma.sigma == SigmaValue::finite(3));
    CHECK(r.sigma.p == 2);
    CHECK(r.sigma.f == 1);
    CHECK(r.classification == "finitely_coverable");

    REQUIRE(r.has_covering);
    CHECK(r.covering.count == 3);
    CHECK(r.covering.ideal_indices == std::vector<size_t>{0, 1});
    REQUIRE(r.covering.lifts.size() == 3);
    CHECK(r.covering.lifts[0].kind == CoverLift::Kind::Ideal);
    CHECK(r.covering.lifts[1].kind == CoverLift::Kind::Ideal);
    CHECK(r.covering.lifts[2].kind == CoverLift::Kind::Diagonal);
    CHECK(r.covering.lifts[2].mu == r.splittings[0].order.integer_coords(1));
    verify_covering(r);
}

TEST_CASE("full report on further fields") {
    const CoverReport bi = build_cover_report(field("x^4-44*x^2+144"));
    CHECK(bi.sigma.sigma == SigmaValue::finite(4));
    CHECK(bi.sigma.f == 2);
    CHECK(bi.classification == "finitely_coverable");
    REQUIRE(bi.has_covering);
    REQUIRE(bi.covering.lifts.size() == 4);
    CHECK(bi.covering.lifts[0].kind == CoverLift::Kind::Subfield);
    CHECK(bi.covering.lifts[1].kind == CoverLift::Kind::Subfield);
    CHECK(bi.covering.lifts[2].kind == CoverLift::Kind::Diagonal);
    CHECK(bi.covering.lifts[3].kind == CoverLift::Kind::Diagonal);
    verify_covering(bi);

    const CoverReport dede = build_cover_report(field("x^3-x^2-2*x-8"));
    CHECK(dede.sigma.sigma == SigmaValue::finite(3));
    verify_covering(dede);

    const CoverReport small = build_cover_report(field("x^2+x+2"));
    CHECK(small.sigma.sigma == SigmaValue::finite(3));
    verify_covering(small);

    const CoverReport inert = build_cover_report(field("x^2-5"));
    CHECK(inert.sigma.sigma == SigmaValue::undecided());
    CHECK(inert.classification == "not_finitely_coverable_undecided");
    CHECK_FALSE(inert.has_covering);
    CHECK(inert.P_set.empty());

    const CoverReport gauss = build_cover_report(field("x^2+1"));
    CHECK(gauss.sigma.sigma == SigmaValue::undecided());
    CHECK_FALSE(gauss.has_covering);

    // a larger prime cap keeps the verdict and widens the scan
    const CoverReport wide = build_cover_report(field(kExamplePoly), 7);
    CHECK(wide.splittings.size() == 4);
    CHECK(wide.P_set == std::vector<Int>{Int(2)});
    CHECK(wide.sigma.sigma == SigmaValue::finite(3));
}
