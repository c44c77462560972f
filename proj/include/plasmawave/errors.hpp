#pragma once

#include <stdexcept>
#include <string>

namespace pw {

enum class ErrorKind { config, numeric, blowup, analysis, cost_guard, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error config_error(const std::string& m) { return Error(ErrorKind::config, m); }
inline Error numeric_error(const std::string& m) { return Error(ErrorKind::numeric, m); }

// CLI exit status for an error kind.
inline int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::config: return 2;
    case ErrorKind::numeric: return 3;
    case ErrorKind::blowup: return 4;
    case ErrorKind::cost_guard: return 2;
    case ErrorKind::analysis: return 3;
    case ErrorKind::io: return 2;
    }
    return 1;
}

}  // namespace pw
