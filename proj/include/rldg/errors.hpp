#ifndef RLDG_ERRORS_HPP
#define RLDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rldg {

// Error taxonomy shared by all modules. Everything derives from Error so
// callers (notably the CLI) can map failures onto exit codes in one place.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A digit outside the alphabet, a malformed portrait string, etc.
struct InvalidDigit : Error {
    using Error::Error;
};

struct EmptySequence : Error {
    using Error::Error;
};

struct EmptyWord : Error {
    using Error::Error;
};

// Size/work caps (table depth, enumeration level, BSGS degree).
struct CapExceeded : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct DepthMismatch : Error {
    using Error::Error;
};

struct LeafOutOfRange : Error {
    using Error::Error;
};

// restrict() walked through a node whose flip bit is set.
struct SwappedPrefix : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

struct DomainMismatch : Error {
    using Error::Error;
};

// psi/delta applied to an automorphism outside J_n.
struct NotAMember : Error {
    using Error::Error;
};

// Orbit-law verification is only defined for odd tree depth.
struct EvenN : Error {
    using Error::Error;
};

}  // namespace rldg

#endif  // RLDG_ERRORS_HPP
