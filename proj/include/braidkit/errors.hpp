#ifndef BRAIDKIT_ERRORS_HPP
#define BRAIDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidkit {

// All library failures derive from Error and carry a stable machine-readable
// code ("ModeMismatch", "DivisionByZero", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define BRAIDKIT_DEFINE_ERROR(NAME)                                  \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

BRAIDKIT_DEFINE_ERROR(SyntaxError);
BRAIDKIT_DEFINE_ERROR(ModeMismatch);
BRAIDKIT_DEFINE_ERROR(DivisionByZero);
BRAIDKIT_DEFINE_ERROR(NotDualizable);
BRAIDKIT_DEFINE_ERROR(IrreducibleFactorError);
BRAIDKIT_DEFINE_ERROR(SingularRPrime);
BRAIDKIT_DEFINE_ERROR(UnknownFamily);
BRAIDKIT_DEFINE_ERROR(InconsistentRelations);
BRAIDKIT_DEFINE_ERROR(DegreeBoundExceeded);
BRAIDKIT_DEFINE_ERROR(DegreeUnsupported);
BRAIDKIT_DEFINE_ERROR(RPrimeConditionFailed);
BRAIDKIT_DEFINE_ERROR(NotBiInvertible);
BRAIDKIT_DEFINE_ERROR(VNotInvertible);
BRAIDKIT_DEFINE_ERROR(NotABicharacter);
BRAIDKIT_DEFINE_ERROR(NotAProjection);
BRAIDKIT_DEFINE_ERROR(AntipodeNotInvertible);
BRAIDKIT_DEFINE_ERROR(NotABialgebraMap);
BRAIDKIT_DEFINE_ERROR(InputNotBraidedHopf);
BRAIDKIT_DEFINE_ERROR(OutputVerificationFailed);
BRAIDKIT_DEFINE_ERROR(SingularMatrix);
BRAIDKIT_DEFINE_ERROR(InvalidInput);

#undef BRAIDKIT_DEFINE_ERROR

} // namespace braidkit

#endif
