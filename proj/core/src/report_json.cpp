#include "oddzeta/report_json.hpp"

#include <cstdio>
#include <sstream>

namespace oddzeta::identities {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const IdentityReport& r) {
    std::ostringstream os;
    os << "{\"identity\": \"" << to_string(r.identity) << "\""
       << ", \"m\": " << r.m
       << ", \"t\": \"" << r.t.to_string() << "\""
       << ", \"prec_bits\": " << r.prec_bits
       << ", \"lhs\": \"" << r.lhs.decimal_for_prec() << "\""
       << ", \"rhs\": \"" << r.rhs.decimal_for_prec() << "\""
       << ", \"abs_diff_log2\": " << fmt_double(r.abs_diff_log2)
       << ", \"tolerance_log2\": " << fmt_double(r.tolerance_log2)
       << ", \"pass\": " << (r.pass ? "true" : "false")
       << ", \"truncations\": [";
    for (size_t i = 0; i < r.truncations.size(); ++i) {
        if (i > 0) os << ", ";
        os << "{\"terms\": " << r.truncations[i].terms_used
           << ", \"tail_log2\": " << fmt_double(r.truncations[i].tail_bound_log2) << "}";
    }
    os << "]}";
    return os.str();
}

std::string to_text(const IdentityReport& r) {
    std::ostringstream os;
    os << "identity:       " << to_string(r.identity) << "\n"
       << "m:              " << r.m << "\n"
       << "t:              " << r.t.to_string() << "\n"
       << "prec_bits:      " << r.prec_bits << "\n"
       << "lhs:            " << r.lhs.decimal_for_prec() << "\n"
       << "rhs:            " << r.rhs.decimal_for_prec() << "\n"
       << "abs_diff_log2:  " << fmt_double(r.abs_diff_log2) << "\n"
       << "tolerance_log2: " << fmt_double(r.tolerance_log2) << "\n"
       << "pass:           " << (r.pass ? "true" : "false") << "\n";
    for (const auto& tr : r.truncations)
        os << "truncation:     " << tr.terms_used << " terms, tail_log2 "
           << fmt_double(tr.tail_bound_log2) << "\n";
    return os.str();
}

}  // namespace oddzeta::identities
