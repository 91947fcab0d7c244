#pragma once

#include <stdexcept>
#include <string>

namespace tango {

/// Parse-level failure in a QASM source. Carries 1-based line/column.
class QasmError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnsupportedGate, IndexOutOfRange };

    QasmError(Kind kind, int line, int col, const std::string& msg)
        : std::runtime_error(format(kind, line, col, msg)),
          kind_(kind), line_(line), col_(col) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(Kind kind, int line, int col, const std::string& msg);

    Kind kind_;
    int line_;
    int col_;
};

/// Bad coupling-graph input: unknown builtin, malformed edge list,
/// self loops, or a disconnected graph.
class ArchError : public std::runtime_error {
public:
    explicit ArchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Circuit requests more logical qubits than the device offers (or the
/// verifier's dense-matrix cap is exceeded).
class TooManyQubits : public std::runtime_error {
public:
    explicit TooManyQubits(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tango
