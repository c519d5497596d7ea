#pragma once

#include <string>

#include "oddzeta/identities.hpp"

namespace oddzeta::identities {

/// Serializes a report to the stable JSON object
///   {"identity": ..., "m": ..., "t": "p/q", "prec_bits": ..., "lhs": ...,
///    "rhs": ..., "abs_diff_log2": ..., "tolerance_log2": ..., "pass": ...,
///    "truncations": [{"terms": ..., "tail_log2": ...}]}
/// with lhs/rhs as decimal strings of ceil(prec * 0.30103) significant digits.
std::string to_json(const IdentityReport& report);

/// Text rendering carrying the same numeric content (identical digit strings).
std::string to_text(const IdentityReport& report);

}  // namespace oddzeta::identities
