#ifndef PCG_ERRORS_HPP
#define PCG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcg {

enum class ErrorKind {
    // exact core
    SingularSystem,
    PoleAtPoint,
    SingularAtPoint,
    // contact layer
    NotContact,
    NoGlobalFrame,
    NotInContactDistribution,
    NotIsotropic,
    RankDeficient,
    NotNonDegenerate,
    IdentityViolated,
    InternalInconsistency,
    // paracontact layer
    AxiomViolated,
    // correspondence layer
    NotOnUnitCircle,
    AnticommutationFails,
    CorollaryViolated,
    // connections layer
    SingularMetric,
    TheoremViolated,
    // parser / structure files
    SyntaxError,
    UnknownIdentifier,
    ZeroDenominator,
    ShapeMismatch,
    DuplicateSection,
    MissingSection,
    UnknownKey,
    UnknownGalleryName,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::PoleAtPoint: return "PoleAtPoint";
        case ErrorKind::SingularAtPoint: return "SingularAtPoint";
        case ErrorKind::NotContact: return "NotContact";
        case ErrorKind::NoGlobalFrame: return "NoGlobalFrame";
        case ErrorKind::NotInContactDistribution: return "NotInContactDistribution";
        case ErrorKind::NotIsotropic: return "NotIsotropic";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotNonDegenerate: return "NotNonDegenerate";
        case ErrorKind::IdentityViolated: return "IdentityViolated";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::AxiomViolated: return "AxiomViolated";
        case ErrorKind::NotOnUnitCircle: return "NotOnUnitCircle";
        case ErrorKind::AnticommutationFails: return "AnticommutationFails";
        case ErrorKind::CorollaryViolated: return "CorollaryViolated";
        case ErrorKind::SingularMetric: return "SingularMetric";
        case ErrorKind::TheoremViolated: return "TheoremViolated";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DuplicateSection: return "DuplicateSection";
        case ErrorKind::MissingSection: return "MissingSection";
        case ErrorKind::UnknownKey: return "UnknownKey";
        case ErrorKind::UnknownGalleryName: return "UnknownGalleryName";
    }
    return "UnknownError";
}

/// Single exception type for the whole library.  `kind()` identifies the
/// failure class; the message carries the witness (index, offending value in
/// canonical printing, ...).  Parse errors also record a character offset.
class Error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Error(ErrorKind kind, const std::string& msg, std::size_t position = npos)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          kind_(kind),
          position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// 0-based character offset for parser errors; npos otherwise.
    std::size_t position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace pcg

#endif
