#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringcover/coverability.hpp"
#include "ringcover/errors.hpp"
#include "ringcover/explicit_ring.hpp"
#include "ringcover/integer.hpp"
#include "ringcover/number_field.hpp"
#include "ringcover/report.hpp"
#include "ringcover/splitting.hpp"

namespace {

using namespace ringcover;

constexpr int kExitParse = 2;
constexpr int kExitBadPoly = 3;
constexpr int kExitNotPrime = 4;
constexpr int kExitBadTables = 5;
constexpr int kExitSizeBound = 6;

NumberField field_from_text(const std::string& poly_text) {
    PolyInt f = PolyInt::parse(poly_text); // PolyParseError -> exit 2
    return NumberField(std::move(f));      // NonMonic/Reducible -> exit 3
}

// "p:f1,f2,..." -> product-of-fields oracle input.
std::pair<Int, std::vector<unsigned>> parse_product_spec(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw PolyParseError("product spec must look like p:f1,f2,...");
    Int p;
    std::vector<unsigned> degrees;
    try {
        p = Int(text.substr(0, colon));
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty degree");
            const long f = std::stol(item);
            if (f < 1) throw std::invalid_argument("degree must be positive");
            degrees.push_back(static_cast<unsigned>(f));
        }
    } catch (const std::exception&) {
        throw PolyParseError("product spec must look like p:f1,f2,...");
    }
    if (degrees.empty()) throw PolyParseError("product spec needs at least one degree");
    return {p, degrees};
}

int run_analyze(const std::string& poly_text, const std::string& format, long prime_cap,
                bool verbose) {
    const NumberField K = field_from_text(poly_text);
    const CoverReport report = build_cover_report(K, prime_cap);
    if (verbose) {
        std::cerr << "field degree " << K.degree() << ", discriminant "
                  << K.discriminant().get_str() << "\n";
        for (const SplittingData& s : report.splittings)
            std::cerr << "split " << s.ideals.size() << " prime(s) over p = " << s.p.get_str()
                      << ", v_p(index) = " << s.index_val << "\n";
    }
    if (format == "json")
        std::cout << render_report_json(report);
    else
        std::cout << render_report_text(report);
    return 0;
}

int run_split(const std::string& poly_text, long p_value, const std::string& format,
              bool verbose) {
    const NumberField K = field_from_text(poly_text);
    const Int p(p_value);
    if (!is_prime(p)) throw CompositeModulusError(p.get_str() + " is not prime");
    const SplittingData s = split_prime(K, p);
    if (verbose)
        std::cerr << "maximal order at " << p.get_str() << " has denominator "
                  << s.order.denom.get_str() << "\n";
    if (format == "json")
        std::cout << render_split_json(s);
    else
        std::cout << render_split_text(s);
    return 0;
}

int run_oracle(const std::string& product_spec, const std::string& ring_file,
               const std::string& format, long oracle_bound, bool verbose) {
    ExplicitRing ring;
    if (!product_spec.empty()) {
        const auto [p, degrees] = parse_product_spec(product_spec);
        if (!is_prime(p)) throw CompositeModulusError(p.get_str() + " is not prime");
        ring = product_of_fields(p, degrees, static_cast<size_t>(oracle_bound));
    } else if (!ring_file.empty()) {
        std::ifstream in(ring_file);
        if (!in) throw InvalidRingTablesError("cannot open ring file: " + ring_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        ring = ring_from_json(buf.str());
    } else {
        throw PolyParseError("oracle needs --product or --ring-file");
    }
    if (verbose)
        std::cerr << "ring has " << ring.size << " elements, "
                  << maximal_subrings(ring).size() << " maximal subring(s)\n";
    CoverSolution cover;
    const SigmaValue sigma = covering_number_exact(ring, &cover);
    if (format == "json")
        std::cout << render_oracle_json(ring, sigma, &cover);
    else
        std::cout << render_oracle_text(ring, sigma, &cover);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* seed_text = std::getenv("RING_COVER_SEED")) {
        try {
            set_factorization_seed(std::stoull(seed_text));
        } catch (const std::exception&) {
            std::cerr << "RING_COVER_SEED must be an unsigned integer\n";
            return kExitParse;
        }
    }

    CLI::App app{"Coverability analysis for rings of integers of number fields"};
    app.require_subcommand(1);

    std::string poly_text, format = "text", product_spec, ring_file;
    long p_value = 0, prime_cap = 0, oracle_bound = 4096;
    bool verbose = false;
    app.add_flag("--verbose", verbose, "verbose diagnostics");

    CLI::App* analyze = app.add_subcommand("analyze", "full coverability report for a field");
    analyze->add_option("--poly", poly_text, "monic integer polynomial, e.g. x^2+1")->required();
    analyze->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--prime-cap", prime_cap, "scan primes up to this bound")
        ->check(CLI::Range(2L, 1000000L));

    CLI::App* split = app.add_subcommand("split", "prime splitting in the ring of integers");
    split->add_option("--poly", poly_text, "monic integer polynomial")->required();
    split->add_option("--p", p_value, "prime to split")->required();
    split->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* oracle = app.add_subcommand("oracle", "exact covering number from structure tables");
    oracle->add_option("--product", product_spec, "product of fields, p:f1,f2,...");
    oracle->add_option("--ring-file", ring_file, "JSON file with labels/add/mul tables");
    oracle->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    oracle->add_option("--oracle-bound", oracle_bound, "construction size bound")
        ->check(CLI::Range(1L, 4096L));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : 0;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(poly_text, format, prime_cap, verbose);
        if (app.got_subcommand(split)) return run_split(poly_text, p_value, format, verbose);
        return run_oracle(product_spec, ring_file, format, oracle_bound, verbose);
    } catch (const PolyParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ZeroPolynomialError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NonMonicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadPoly;
    } catch (const ReducibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadPoly;
    } catch (const CompositeModulusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotPrime;
    } catch (const InvalidRingTablesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadTables;
    } catch (const SizeBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeBound;
    } catch (const RingCoverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
