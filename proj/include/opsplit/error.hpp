#pragma once

#include <stdexcept>
#include <string>

namespace opsplit {

// All library errors carry a stable name used by the CLI (exit code 2 paths).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define OPSPLIT_DEFINE_ERROR(E)                                        \
    class E : public Error {                                           \
    public:                                                            \
        explicit E(const std::string& what) : Error(#E, what) {}       \
    }

OPSPLIT_DEFINE_ERROR(FieldMismatch);
OPSPLIT_DEFINE_ERROR(InvalidField);
OPSPLIT_DEFINE_ERROR(DimensionMismatch);
OPSPLIT_DEFINE_ERROR(SingularMatrix);
OPSPLIT_DEFINE_ERROR(UnknownOperation);
OPSPLIT_DEFINE_ERROR(MissingOperation);
OPSPLIT_DEFINE_ERROR(UnknownKind);
OPSPLIT_DEFINE_ERROR(DegenerateForm);
OPSPLIT_DEFINE_ERROR(NotADerivation);
OPSPLIT_DEFINE_ERROR(StructureCheckFailed);
OPSPLIT_DEFINE_ERROR(UnknownCaseId);
OPSPLIT_DEFINE_ERROR(ParseError);

#undef OPSPLIT_DEFINE_ERROR

} // namespace opsplit
