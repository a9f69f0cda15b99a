#include "ringcover/report.hpp"

#include <sstream>

#include <json.hpp>

namespace ringcover {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integers stay JSON numbers while they are exactly representable in a
// double (|v| <= 2^53); larger values become decimal strings.
ordered_json json_int(const Int& v) {
    static const Int limit = Int(1) << 53;
    if (v <= limit && v >= -limit) return static_cast<int64_t>(to_long(v));
    return v.get_str();
}

ordered_json splitting_to_json(const SplittingData& s) {
    ordered_json j;
    j["p"] = json_int(s.p);
    ordered_json factors = ordered_json::array();
    for (const PrimeIdealData& P : s.ideals) {
        ordered_json fac;
        fac["e"] = P.e;
        fac["f"] = P.f;
        factors.push_back(std::move(fac));
    }
    j["factors"] = std::move(factors);
    j["index_valuation"] = s.index_val;
    j["common_index_divisor"] = is_common_index_divisor(s);
    return j;
}

std::string lift_label(const CoverLift& lift) {
    std::ostringstream out;
    switch (lift.kind) {
    case CoverLift::Kind::Ideal:
        out << "the prime ideal P" << (lift.i + 1);
        break;
    case CoverLift::Kind::Subfield:
        out << "preimage of the index-" << lift.subfield_prime << " subfield of A/P"
            << (lift.i + 1);
        break;
    case CoverLift::Kind::Diagonal: {
        out << "twisted diagonal of P" << (lift.i + 1) << " and P" << (lift.j + 1)
            << " (t = " << lift.frobenius << "), mu = [";
        for (size_t k = 0; k < lift.mu.size(); ++k) {
            if (k) out << ", ";
            out << lift.mu[k].get_str();
        }
        out << "]";
        break;
    }
    }
    return out.str();
}

ordered_json lift_to_json(const CoverLift& lift) {
    ordered_json j;
    switch (lift.kind) {
    case CoverLift::Kind::Ideal:
        j["kind"] = "ideal";
        j["i"] = lift.i;
        break;
    case CoverLift::Kind::Subfield:
        j["kind"] = "subfield";
        j["i"] = lift.i;
        j["l"] = lift.subfield_prime;
        break;
    case CoverLift::Kind::Diagonal: {
        j["kind"] = "diagonal";
        j["i"] = lift.i;
        j["j"] = lift.j;
        j["t"] = lift.frobenius;
        ordered_json mu = ordered_json::array();
        for (const Int& c : lift.mu) mu.push_back(json_int(c));
        j["mu"] = std::move(mu);
        break;
    }
    }
    return j;
}

} // namespace

std::string splitting_line(const SplittingData& s) {
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < s.ideals.size()) {
        size_t j = i;
        while (j < s.ideals.size() && s.ideals[j].e == s.ideals[i].e &&
               s.ideals[j].f == s.ideals[i].f)
            ++j;
        if (!first) out << ", ";
        first = false;
        out << "(e=" << s.ideals[i].e << ",f=" << s.ideals[i].f << ")";
        if (j - i > 1) out << " ×" << (j - i);
        i = j;
    }
    out << "; v_" << s.p.get_str() << "(index) = " << s.index_val;
    out << "; common index divisor: " << (is_common_index_divisor(s) ? "yes" : "no");
    return out.str();
}

std::string render_split_text(const SplittingData& s) {
    return "p = " + s.p.get_str() + ": " + splitting_line(s) + "\n";
}

std::string render_split_json(const SplittingData& s) {
    return splitting_to_json(s).dump(2) + "\n";
}

std::string render_report_text(const CoverReport& r) {
    std::ostringstream out;
    out << "field: " << r.poly.to_string() << "\n";
    out << "degree: " << r.degree << "\n";
    out << "discriminant: " << r.disc.get_str() << "\n";
    for (const SplittingData& s : r.splittings)
        out << "p = " << s.p.get_str() << ": " << splitting_line(s) << "\n";

    out << "P set: {";
    for (size_t i = 0; i < r.P_set.size(); ++i) {
        if (i) out << ", ";
        out << r.P_set[i].get_str();
    }
    out << "}\n";
    for (const auto& [p, fs] : r.F_sets) {
        out << "F(" << p.get_str() << ") = {";
        for (size_t i = 0; i < fs.size(); ++i) {
            if (i) out << ", ";
            out << fs[i];
        }
        out << "}\n";
    }

    if (r.sigma.sigma.kind == SigmaKind::Finite) {
        out << "sigma(A) = " << r.sigma.sigma.m.get_str() << ", attained at p = "
            << r.sigma.p.get_str() << ", f = " << r.sigma.f << "\n";
        out << "classification: finitely coverable\n";
    } else {
        out << "sigma(A) = " << sigma_to_string(r.sigma.sigma) << "\n";
        out << "classification: not finitely coverable (sigma is ∞ or not coverable; "
               "monogenicity not decided)\n";
    }

    if (r.has_covering) {
        out << "covering of the residue ring at p = " << r.covering.p.get_str()
            << ", f = " << r.covering.f << " (" << r.covering.count.get_str() << " parts, ideals";
        for (size_t idx : r.covering.ideal_indices) out << " P" << (idx + 1);
        out << "):\n";
        for (size_t k = 0; k < r.covering.lifts.size(); ++k)
            out << "  part " << (k + 1) << ": " << lift_label(r.covering.lifts[k]) << "\n";
    }
    return out.str();
}

std::string render_report_json(const CoverReport& r) {
    ordered_json j;
    ordered_json field;
    field["poly"] = r.poly.to_string();
    field["degree"] = r.degree;
    field["discriminant"] = json_int(r.disc);
    j["field"] = std::move(field);

    ordered_json primes = ordered_json::array();
    for (const SplittingData& s : r.splittings) primes.push_back(splitting_to_json(s));
    j["primes"] = std::move(primes);

    ordered_json pset = ordered_json::array();
    for (const Int& p : r.P_set) pset.push_back(json_int(p));
    j["P_set"] = std::move(pset);

    ordered_json fsets = ordered_json::object();
    for (const auto& [p, fs] : r.F_sets) {
        ordered_json arr = ordered_json::array();
        for (unsigned f : fs) arr.push_back(f);
        fsets[p.get_str()] = std::move(arr);
    }
    j["F_sets"] = std::move(fsets);

    ordered_json sigma;
    if (r.sigma.sigma.kind == SigmaKind::Finite)
        sigma["finite"] = json_int(r.sigma.sigma.m);
    else
        sigma["undecided"] = sigma_to_string(r.sigma.sigma);
    j["sigma"] = std::move(sigma);

    j["classification"] = r.classification;

    if (r.sigma.sigma.kind == SigmaKind::Finite) {
        ordered_json witness;
        witness["p"] = json_int(r.sigma.p);
        witness["f"] = r.sigma.f;
        j["witness"] = std::move(witness);
    } else {
        j["witness"] = nullptr;
    }

    if (r.has_covering) {
        ordered_json cov;
        cov["p"] = json_int(r.covering.p);
        cov["f"] = r.covering.f;
        cov["count"] = json_int(r.covering.count);
        ordered_json ideals = ordered_json::array();
        for (size_t idx : r.covering.ideal_indices) ideals.push_back(idx);
        cov["ideals"] = std::move(ideals);
        ordered_json parts = ordered_json::array();
        for (const CoverLift& lift : r.covering.lifts) parts.push_back(lift_to_json(lift));
        cov["parts"] = std::move(parts);
        j["covering"] = std::move(cov);
    } else {
        j["covering"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string render_oracle_text(const ExplicitRing& r, const SigmaValue& v,
                               const CoverSolution* cover) {
    std::ostringstream out;
    out << "ring size: " << r.size << "\n";
    if (v.kind == SigmaKind::Finite)
        out << "sigma = " << v.m.get_str() << "\n";
    else if (v.kind == SigmaKind::NotCoverable)
        out << "not coverable\n";
    else
        out << sigma_to_string(v) << "\n";
    if (cover && v.kind == SigmaKind::Finite) {
        for (size_t k = 0; k < cover->parts.size(); ++k) {
            out << "  subring " << (k + 1) << ": {";
            const std::vector<size_t> elems = cover->parts[k].elements();
            for (size_t i = 0; i < elems.size(); ++i) {
                if (i) out << ", ";
                out << r.labels[elems[i]];
            }
            out << "}\n";
        }
    }
    return out.str();
}

std::string render_oracle_json(const ExplicitRing& r, const SigmaValue& v,
                               const CoverSolution* cover) {
    ordered_json j;
    j["size"] = r.size;
    ordered_json sigma;
    if (v.kind == SigmaKind::Finite)
        sigma["finite"] = json_int(v.m);
    else
        sigma["verdict"] = sigma_to_string(v);
    j["sigma"] = std::move(sigma);
    if (cover && v.kind == SigmaKind::Finite) {
        ordered_json parts = ordered_json::array();
        for (const SubringSet& s : cover->parts) {
            ordered_json labels = ordered_json::array();
            for (size_t e : s.elements()) labels.push_back(r.labels[e]);
            parts.push_back(std::move(labels));
        }
        j["cover"] = std::move(parts);
    } else {
        j["cover"] = nullptr;
    }
    return j.dump(2) + "\n";
}

} // namespace ringcover
