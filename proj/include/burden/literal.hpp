#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace burden {

/// True if `text` is a letter or underscore followed by letters, digits or underscores.
bool is_identifier(std::string_view text);

/// A signed atom. Ordered by atom, then positive before negated.
class Literal {
public:
    /// Throws std::invalid_argument if `atom` is not an identifier.
    explicit Literal(std::string atom, bool negated = false);

    const std::string& atom() const noexcept { return atom_; }
    bool negated() const noexcept { return negated_; }

    Literal complement() const { return Literal(atom_, !negated_, Unchecked{}); }

    /// `p` or `~p`.
    std::string str() const;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;

private:
    struct Unchecked {};
    Literal(std::string atom, bool negated, Unchecked) : atom_(std::move(atom)), negated_(negated) {}

    std::string atom_;
    bool negated_ = false;
};

inline Literal complement(const Literal& x) { return x.complement(); }

/// Parses `p` or `~p` (surrounding whitespace not allowed). Throws std::invalid_argument.
Literal parse_literal(std::string_view text);

} // namespace burden
