#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "netcoord/errors.hpp"

namespace netcoord {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q" (q > 0) or a plain decimal string ("-1.25") into an
// exact rational. Whitespace around the value is ignored.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
        throw Error(ErrorCode::ParseError,
                    std::string("cannot parse rational '") + std::string(text) + "': " + why);
    };

    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return fail("empty string");
    std::size_t end = text.find_last_not_of(" \t\r\n");
    std::string_view body = text.substr(begin, end - begin + 1);

    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) return fail("missing digits");

    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    BigInt num, den = 1;
    if (std::size_t slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view ns = body.substr(0, slash);
        std::string_view ds = body.substr(slash + 1);
        if (!digits_only(ns) || !digits_only(ds)) return fail("expected p/q with integer p, q");
        num = BigInt(std::string(ns));
        den = BigInt(std::string(ds));
        if (den == 0) return fail("denominator must be positive");
    } else if (std::size_t dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail("missing digits");
        if (!whole.empty() && !digits_only(whole)) return fail("bad decimal");
        if (!frac.empty() && !digits_only(frac)) return fail("bad decimal");
        num = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (!digits_only(body)) return fail("expected integer, p/q or decimal");
        num = BigInt(std::string(body));
    }
    if (negative) num = -num;
    return Rational(num, den);
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double approx(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace netcoord
