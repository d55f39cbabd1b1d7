#include "burden/literal.hpp"

#include <cctype>
#include <stdexcept>

namespace burden {

namespace {
bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
} // namespace

bool is_identifier(std::string_view text) {
    if (text.empty() || !ident_start(text.front()))
        return false;
    for (char c : text.substr(1))
        if (!ident_char(c))
            return false;
    return true;
}

Literal::Literal(std::string atom, bool negated) : atom_(std::move(atom)), negated_(negated) {
    if (!is_identifier(atom_))
        throw std::invalid_argument("invalid atom '" + atom_ + "'");
}

std::string Literal::str() const { return negated_ ? "~" + atom_ : atom_; }

Literal parse_literal(std::string_view text) {
    bool negated = false;
    if (!text.empty() && text.front() == '~') {
        negated = true;
        text.remove_prefix(1);
    }
    return Literal(std::string(text), negated);
}

} // namespace burden
