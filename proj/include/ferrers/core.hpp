#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ferrers {

using BigInt = boost::multiprecision::cpp_int;

/// A lattice point (i, j, k) with 1-based coordinates.
/// The defaulted ordering is lexicographic on (i, j, k).
struct Point {
    int i = 1;
    int j = 1;
    int k = 1;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;

    [[nodiscard]] constexpr bool dominated_by(const Point& other) const noexcept {
        return i <= other.i && j <= other.j && k <= other.k;
    }
    /// (i, k, j)
    [[nodiscard]] constexpr Point flipped() const noexcept { return {i, k, j}; }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.i << ',' << p.j << ',' << p.k << ')';
}

inline std::string to_string(const Point& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

enum class ErrorKind {
    InvalidInput,
    NotFerrers,
    NotInDiagram,
    NotInLayer,
    UnsupportedDiagram,
    LinkMismatch,
    NotNormal,
    TooLarge,
    InsufficientDegree,
    HypothesisFailed,
    Internal,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NotFerrers: return "NotFerrers";
        case ErrorKind::NotInDiagram: return "NotInDiagram";
        case ErrorKind::NotInLayer: return "NotInLayer";
        case ErrorKind::UnsupportedDiagram: return "UnsupportedDiagram";
        case ErrorKind::LinkMismatch: return "LinkMismatch";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InsufficientDegree: return "InsufficientDegree";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ferrers
