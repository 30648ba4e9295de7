#ifndef QSC_ERRORS_HPP
#define QSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsc {

// Thrown when a denominator (or a factor of one) becomes zero.
struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a substitution annihilates a denominator factor.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown by q-only algorithms handed a polynomial that involves other variables.
struct not_univariate : std::domain_error {
    explicit not_univariate(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a serialized polynomial or cache file cannot be parsed.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsc

#endif
