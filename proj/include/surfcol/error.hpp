#pragma once

#include <stdexcept>
#include <string>

namespace surfcol {

enum class ErrorKind {
    Io,            // unreadable file, write failure
    Format,        // malformed input text
    Precondition,  // caller violated an operation contract
    Invariant,     // internal consistency check failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) throw Error(kind, msg);
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace surfcol
