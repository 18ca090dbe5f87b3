#pragma once

#include <stdexcept>
#include <string>

namespace wallcross {

enum class ErrorKind {
    invalid_input,   // malformed or inconsistent data
    not_interior,    // point lies on the sector boundary
    on_wall,         // point lies exactly on a good hyperplane
    non_generic,     // point satisfies more than one wall condition
    contradiction,   // relation guaranteed by theory failed on the given data
    usage,           // bad command line or file arguments
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace wallcross
