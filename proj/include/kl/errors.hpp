#pragma once

#include <stdexcept>
#include <string>

namespace kl {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct TableTooLarge : Error {
    explicit TableTooLarge(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct NotReal : Error {
    explicit NotReal(const std::string& msg) : Error(msg) {}
};

struct InvalidType : Error {
    explicit InvalidType(const std::string& msg) : Error(msg) {}
};

struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& msg) : Error(msg) {}
};

struct NotSL2Decomposable : Error {
    explicit NotSL2Decomposable(const std::string& msg) : Error(msg) {}
};

struct WrongType : Error {
    explicit WrongType(const std::string& msg) : Error(msg) {}
};

struct BadPrime : Error {
    explicit BadPrime(const std::string& msg) : Error(msg) {}
};

struct NonUniqueSubmodule : Error {
    explicit NonUniqueSubmodule(const std::string& msg) : Error(msg) {}
};

struct NonIntegerSwan : Error {
    explicit NonIntegerSwan(const std::string& msg) : Error(msg) {}
};

struct Unlisted : Error {
    explicit Unlisted(const std::string& msg) : Error(msg) {}
};

struct Internal : Error {
    explicit Internal(const std::string& msg) : Error(msg) {}
};

}  // namespace kl
