#pragma once

// The qcat command line: verify, show and cache subcommands.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/claims.hpp"

namespace qcat::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Text-mode witnesses keep this many nonzero terms.
inline constexpr std::size_t kWitnessTerms = 12;

struct NRange {
  std::uint64_t from;
  std::uint64_t to;
};

/// "A..B" or "A" with 1 <= A <= B. Throws std::invalid_argument.
NRange parse_n_range(std::string_view text);

/// At most `max_terms` nonzero terms followed by an ellipsis and a note with
/// the degree and the full term count.
std::string truncate_witness(const RatPoly& witness, std::size_t max_terms = kWitnessTerms);

std::string render_json(const std::vector<ClaimReport>& reports, bool timing);
std::string render_text(const std::vector<ClaimReport>& reports, bool timing);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli
