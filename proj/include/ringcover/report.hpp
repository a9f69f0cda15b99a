#pragma once

#include <string>

#include "ringcover/coverability.hpp"
#include "ringcover/explicit_ring.hpp"

namespace ringcover {

// One-line digest of a splitting:
//   "(e=1,f=1) ×2, (e=1,f=2) ×2; v_2(index) = 1; common index divisor: yes"
std::string splitting_line(const SplittingData& s);

std::string render_split_text(const SplittingData& s);
std::string render_split_json(const SplittingData& s);

std::string render_report_text(const CoverReport& r);
// Stable key order, integers beyond 2^53 rendered as decimal strings; the
// output re-renders byte-identically after a parse.
std::string render_report_json(const CoverReport& r);

std::string render_oracle_text(const ExplicitRing& r, const SigmaValue& v,
                               const CoverSolution* cover);
std::string render_oracle_json(const ExplicitRing& r, const SigmaValue& v,
                               const CoverSolution* cover);

} // namespace ringcover
