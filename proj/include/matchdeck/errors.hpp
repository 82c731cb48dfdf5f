#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchdeck {

// Input exceeds a hard size bound (vertex counts, enumeration limits).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; `position` is a byte offset (or line number for
// line-oriented formats) pointing at the offending spot.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A multiset of cards that cannot be the vertex-deleted polynomial deck of
// any graph (wrong homogeneity, failed divisibility, ...).
class InconsistentDeckError : public std::runtime_error {
public:
    explicit InconsistentDeckError(const std::string& what) : std::runtime_error(what) {}
};

// A checked mathematical clause failed; `clause` names it.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& clause, const std::string& detail)
        : std::runtime_error("verification failed [" + clause + "]: " + detail),
          clause_(clause) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

}  // namespace matchdeck
