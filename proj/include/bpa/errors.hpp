#pragma once

#include <stdexcept>
#include <string>

namespace bpa {

// Two formulas that must agree produced different values, or an exact
// integer division required by an identity failed.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested working precision cannot certify the requested error bound.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

enum class parse_error_kind {
    malformed,
    out_of_range,
    duplicate_element,
    bar_count,
    missing_element,
};

class parse_error : public std::runtime_error {
public:
    parse_error(parse_error_kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    parse_error_kind kind() const noexcept { return kind_; }

private:
    parse_error_kind kind_;
};

} // namespace bpa
