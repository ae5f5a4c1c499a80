#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swcalc {

/// Base class for everything thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An argument fell outside an operation's stated range.
class argument_error : public error {
public:
    using error::error;
};

/// Two operands live over different ambient spaces (or different truncations).
class incompatible_spaces : public error {
public:
    using error::error;
};

/// Inversion, or a negative power, of an element whose constant term is zero.
class not_invertible : public error {
public:
    using error::error;
};

/// A value outside an operation's domain (exp of a non-augmentation class, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Bundle rank bookkeeping would go negative.
class rank_error : public error {
public:
    using error::error;
};

/// The parameters are valid but fall outside the cases the machinery computes.
class inapplicable_case : public error {
public:
    using error::error;
};

/// A parameter set violating an admissibility constraint.
class invalid_spec : public error {
public:
    using error::error;
};

/// A cross-check between two independent computation routes disagreed.
class verification_error : public error {
public:
    using error::error;
};

/// Expression text rejected by the parser. Carries the byte offset of the
/// failure and a description of the expected token set.
class parse_error : public error {
public:
    parse_error(std::size_t offset, std::string expected)
        : error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace swcalc
