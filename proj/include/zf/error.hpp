#ifndef ZF_ERROR_HPP
#define ZF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zf {

// Base of every error the library throws. The CLI maps the subclasses to
// exit codes (input/format/domain -> 2, budget -> 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace zf

#endif // ZF_ERROR_HPP
