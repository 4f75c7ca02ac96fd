#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace zsr {

/// Exact rational backed by GMP. Library code keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// num/den in lowest terms. Prefer this to the two-argument mpq_class constructor,
/// which does not canonicalize.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// `p/q` with q > 0, or `p` when q == 1. No whitespace.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Parses `p` or `p/q` (optional leading sign). Throws InvalidArgument on malformed input
/// or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto digits_only = [&](std::size_t b, std::size_t e) {
        if (b >= e) return false;
        for (std::size_t i = b; i < e; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits_only(start, s.size())
                                         : digits_only(start, slash) && digits_only(slash + 1, s.size());
    if (!ok) throw Error(ErrorKind::InvalidArgument, "malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidArgument, "malformed rational '" + s + "'");
    if (r.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace zsr
