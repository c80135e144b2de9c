#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordruin {

// One validation finding: a stable machine-readable code plus a message.
struct Diagnostic {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Diagnostic> failures;
    std::vector<Diagnostic> warnings;

    bool ok() const { return failures.empty(); }
};

// Failure with a stable code (SINGULAR, RESIDUAL_TOO_LARGE, SINGULAR_WALK,
// PERIODIC, NOT_BINARY, ALL_CENSORED, PARSE_ERROR, SCHEMA_ERROR, ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Thrown by analysis entry points when input validation fails.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report)
        : std::runtime_error(describe(report)), report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    static std::string describe(const ValidationReport& report) {
        std::string s = "VALIDATION_FAILED:";
        for (const auto& d : report.failures) s += " " + d.code;
        return s;
    }

    ValidationReport report_;
};

}  // namespace wordruin
