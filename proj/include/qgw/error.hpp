#pragma once
#include <stdexcept>
#include <string>

namespace qgw {

// Structured failure: code, module, witness.  Thrown only for precondition
// violations; certificate failures are returned as reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string module, std::string witness = {})
        : std::runtime_error(code + " [" + module + "] " + witness),
          code_(std::move(code)), module_(std::move(module)), witness_(std::move(witness)) {}
    const std::string& code() const { return code_; }
    const std::string& module() const { return module_; }
    const std::string& witness() const { return witness_; }

private:
    std::string code_, module_, witness_;
};

} // namespace qgw
