#pragma once

#include <stdexcept>
#include <string>

namespace dynkin {

// Domain errors map to CLI exit code 2, BudgetExceeded to exit code 3.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NotGCM : DomainError {
    explicit NotGCM(const std::string& w) : DomainError("not a generalized Cartan matrix: " + w) {}
};
struct NotSymmetrizable : DomainError {
    NotSymmetrizable() : DomainError("Cartan matrix is not symmetrizable") {}
};
struct Decomposable : DomainError {
    Decomposable() : DomainError("diagram is decomposable") {}
};
struct SingularCartan : DomainError {
    SingularCartan() : DomainError("Cartan matrix is singular") {}
};
struct NotExtensible : DomainError {
    NotExtensible() : DomainError("marked diagram is not extensible") {}
};
struct NotExtensiblePair : DomainError {
    NotExtensiblePair() : DomainError("pair of marked diagrams is not extensible") {}
};
struct NoAdmissibleM : DomainError {
    NoAdmissibleM() : DomainError("no chain length with nonsingular Cartan matrix found") {}
};
struct NonzeroBoxes : DomainError {
    NonzeroBoxes() : DomainError("number of boxes is nonzero") {}
};
struct MiddleNotConstant : DomainError {
    MiddleNotConstant() : DomainError("middle root coefficients are not constant (internal bug)") {}
};
struct SupportTooWide : DomainError {
    SupportTooWide() : DomainError("weight support does not fit on the diagram at this chain length") {}
};
struct NotIndefinite : DomainError {
    NotIndefinite() : DomainError("diagram is not of indefinite type") {}
};
struct NotFiniteType : DomainError {
    NotFiniteType() : DomainError("diagram is not of finite type") {}
};
struct NotComparable : DomainError {
    NotComparable() : DomainError("weights are not comparable in the partial order") {}
};
struct HeightMismatch : DomainError {
    HeightMismatch() : DomainError("height compatibility condition fails") {}
};
struct NotSupported : DomainError {
    explicit NotSupported(const std::string& w) : DomainError(w) {}
};
struct NotInRootCone : DomainError {
    explicit NotInRootCone(const std::string& w) : DomainError(w) {}
};
struct ParseError : DomainError {
    explicit ParseError(const std::string& w) : DomainError("parse error: " + w) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(long long budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exceeded") {}
};

}  // namespace dynkin
