#ifndef EDK_RATIONAL_HPP
#define EDK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edk {

using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Domain-level failure (inputs are well-formed but the request makes no sense).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

/// Accepts "a", "a/b" and finite decimals such as "0.25".
inline Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) {
        throw ParseError("empty rational");
    }
    Rational q;
    const auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            if (s.find('/') != std::string::npos) {
                throw ParseError("bad rational '" + s + "'");
            }
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") {
                throw ParseError("bad rational '" + s + "'");
            }
            if (digits.front() == '+') {
                digits.erase(0, 1);
            }
            std::string den = "1" + std::string(s.size() - dot - 1, '0');
            q = Rational(mpz_class(digits, 10), mpz_class(den, 10));
        } else {
            if (s.front() == '+') {
                s.erase(0, 1);
            }
            if (q.set_str(s, 10) != 0) {
                throw ParseError("bad rational '" + s + "'");
            }
            if (q.get_den() == 0) {
                throw ParseError("zero denominator in '" + s + "'");
            }
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'");
    }
    q.canonicalize();
    return q;
}

/// Comma separated list, e.g. "1/3,1/3,1/3".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

/// mpq_class(num, den) does not reduce; this does.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace edk

#endif  // EDK_RATIONAL_HPP
