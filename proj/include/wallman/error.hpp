#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace wallman {

using ElementId = std::uint32_t;

enum class ErrorCode {
    parse_error,
    unknown_element,
    not_a_poset,
    not_a_lattice,
    no_bounds,
    degenerate_lattice,
    not_distributive,
    not_centered,
    not_a_filter,
    not_prime,
    not_normal,
    non_unique_extension,
    element_in_filter,
    too_large,
    not_generating,
    precondition_failed,
    not_composable,
    invalid_node,
    missing_stages,
    empty_phi_value,
    size_cap,
    invalid_argument,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::not_a_poset: return "NotAPoset";
    case ErrorCode::not_a_lattice: return "NotALattice";
    case ErrorCode::no_bounds: return "NoBounds";
    case ErrorCode::degenerate_lattice: return "DegenerateLattice";
    case ErrorCode::not_distributive: return "NotDistributive";
    case ErrorCode::not_centered: return "NotCentered";
    case ErrorCode::not_a_filter: return "NotAFilter";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::not_normal: return "NotNormal";
    case ErrorCode::non_unique_extension: return "NonUniqueExtension";
    case ErrorCode::element_in_filter: return "ElementInFilter";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::not_generating: return "NotGenerating";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::not_composable: return "NotComposable";
    case ErrorCode::invalid_node: return "InvalidNode";
    case ErrorCode::missing_stages: return "MissingStages";
    case ErrorCode::empty_phi_value: return "EmptyPhiValue";
    case ErrorCode::size_cap: return "SizeCap";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every library failure is one of these. `witness` carries the offending
/// element ids (a pair for NotALattice, a cycle pair for NotAPoset, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::vector<ElementId> witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code),
          witness_(std::move(witness))
    {
    }

    ErrorCode code() const { return code_; }
    const std::vector<ElementId>& witness() const { return witness_; }

private:
    ErrorCode code_;
    std::vector<ElementId> witness_;
};

/// Raised when a prime filter has zero or several ultrafilter extensions.
/// Carries every extension found.
class NonUniqueExtensionError : public Error {
public:
    NonUniqueExtensionError(const std::string& message, std::vector<Bitset> extensions)
        : Error(ErrorCode::non_unique_extension, message), extensions_(std::move(extensions))
    {
    }

    const std::vector<Bitset>& extensions() const { return extensions_; }

private:
    std::vector<Bitset> extensions_;
};

/// Outcome of a structural predicate. A failed verdict always carries the
/// tuple that violates it.
struct Verdict {
    bool holds = true;
    std::vector<ElementId> witness;

    static Verdict pass() { return {}; }
    static Verdict fail(std::vector<ElementId> w) { return {false, std::move(w)}; }
    explicit operator bool() const { return holds; }
};

} // namespace wallman
