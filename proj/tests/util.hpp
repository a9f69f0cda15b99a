#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ringcover/order.hpp"
#include "ringcover/poly_mod_p.hpp"
#include "ringcover/splitting.hpp"

namespace testutil {

using namespace ringcover;

// Element of the order with the given residue at each listed prime ideal
// (valid modulo the product of those ideals).
inline std::vector<Int> crt_lift(const SplittingData& s, const std::vector<size_t>& idxs,
                                 const std::vector<PolyModP>& residues) {
    const OrderBasis& o = s.order;
    const size_t n = o.basis.rows();
    std::vector<Int> x(n, 0);
    for (size_t k = 0; k < idxs.size(); ++k) {
        std::vector<Int> ek = o.integer_coords(1);
        for (size_t j = 0; j < idxs.size(); ++j) {
            if (j == k) continue;
            const std::vector<Int> u =
                idempotent_split(o, s.ideals[idxs[j]].lattice, s.ideals[idxs[k]].lattice);
            ek = o.mul(ek, u);
        }
        const std::vector<Int> term = o.mul(s.ideals[idxs[k]].lift_residue(residues[k]), ek);
        for (size_t t = 0; t < n; ++t) x[t] += term[t];
    }
    return x;
}

// c evaluated at beta inside F_p[z]/(mod).
inline PolyModP eval_in_ext(const PolyModP& c, const PolyModP& beta, const PolyModP& mod) {
    PolyModP acc = PolyModP::zero(mod.modulus());
    for (int k = c.degree(); k >= 0; --k) {
        acc = (acc * beta).mod(mod);
        acc = acc + PolyModP(mod.modulus(), {c.coeff(k)});
    }
    return acc;
}

// Residue-field element number idx (base-p digit vector of length f).
inline PolyModP residue_from_index(const Int& p, int f, long idx) {
    const long pl = to_long(p);
    std::vector<Int> c(static_cast<size_t>(f));
    for (int k = 0; k < f; ++k) {
        c[static_cast<size_t>(k)] = idx % pl;
        idx /= pl;
    }
    return PolyModP(p, std::move(c));
}

struct RunResult {
    int code = -1;
    std::string out;
};

// Run a shell command, capturing the chosen streams.
inline RunResult run_cmd(const std::string& cmd, bool merge_stderr = true) {
    RunResult res;
    const std::string full = cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) res.out += buf.data();
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace testutil
