#pragma once

#include <stdexcept>
#include <string>

namespace tagclust {

enum class ErrorKind {
    usage,       // bad flags, bad arguments, contract violations
    data,        // missing or invalid input data
    parse,       // malformed JSON or schema violation
    network,     // request failed; safe to retry, cache is preserved
    infeasible,  // configuration valid but unsatisfiable (k > rows, short k-range)
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage: return "usage";
        case ErrorKind::data: return "data";
        case ErrorKind::parse: return "parse";
        case ErrorKind::network: return "network";
        case ErrorKind::infeasible: return "infeasible";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    bool retriable() const { return kind_ == ErrorKind::network; }

    // CLI exit codes: 1 usage, 2 data, 3 infeasible configuration.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::usage: return 1;
            case ErrorKind::infeasible: return 3;
            default: return 2;
        }
    }

private:
    ErrorKind kind_;
};

}  // namespace tagclust
