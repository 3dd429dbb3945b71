#pragma once

#include <stdexcept>
#include <string>

namespace plstrat {

/// Failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
    NotAMember,
    EmptyInput,
    Disjointness,
    Structural,
    Genericity,
    Degeneracy,
    Parse,
    InvariantBreach,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace plstrat
