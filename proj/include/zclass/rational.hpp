#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zclass {

using Rat = mpq_class;

// Raised when an input file or entry string cannot be parsed.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a value is well-formed but outside the operation's domain
// (non-square matrix, singular matrix where an inverse is required,
// a constructor precondition that fails, and so on).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class dimension_error : public domain_error {
public:
    explicit dimension_error(const std::string& what) : domain_error(what) {}
};

class singular_error : public domain_error {
public:
    explicit singular_error(const std::string& what) : domain_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& x) {
    Rat r = abs(x);
    return r;
}

// Accepts an optional sign, an integer part, and an optional /denominator,
// e.g. "-3", "3/7", "+0". Anything else is rejected.
Rat rat_parse(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

// Decimal rendering when the value terminates within `places` digits,
// otherwise the exact "p/q" form.
std::string rat_decimal(const Rat& x, int places);

}  // namespace zclass
