#include "burden/theory.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace burden {

namespace {

enum class Tok { Ident, Colon, Comma, Arrow, Greater, Tilde, End };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Arrow: return "'=>'";
    case Tok::Greater: return "'>'";
    case Tok::Tilde: return "'~'";
    case Tok::End: return "end of line";
    }
    return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < line.size() && ident_char(line[j]))
                ++j;
            out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
            i = j;
        } else if (c == ':') {
            out.push_back({Tok::Colon, ":", col});
            ++i;
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", col});
            ++i;
        } else if (c == '>') {
            out.push_back({Tok::Greater, ">", col});
            ++i;
        } else if (c == '~') {
            out.push_back({Tok::Tilde, "~", col});
            ++i;
        } else if (c == '=' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Tok::Arrow, "=>", col});
            i += 2;
        } else {
            throw TheoryError(TheoryErrorKind::Syntax, std::string("unexpected character '") + c + "'", line_no, col);
        }
    }
    out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

struct PendingPriority {
    std::string winner, loser;
    int line, winner_col, loser_col;
};

class TheoryParser {
public:
    DefeasibleTheory parse(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no_;
            tokens_ = tokenize(line, line_no_);
            pos_ = 0;
            parse_line();
        }
        for (const auto& p : priorities_) {
            if (!seen_rules_.contains(p.winner))
                fail(TheoryErrorKind::UnknownRuleId, "priority refers to undeclared rule '" + p.winner + "'", p.line,
                     p.winner_col);
            if (!seen_rules_.contains(p.loser))
                fail(TheoryErrorKind::UnknownRuleId, "priority refers to undeclared rule '" + p.loser + "'", p.line,
                     p.loser_col);
        }
        return DefeasibleTheory(std::move(rules_), std::move(superiority_), BurdenSet(std::move(burdens_)));
    }

private:
    [[noreturn]] void fail(TheoryErrorKind kind, const std::string& msg, int line, int col) {
        throw TheoryError(kind, msg, line, col);
    }
    [[noreturn]] void syntax(const std::string& expected) {
        const Token& t = peek();
        fail(TheoryErrorKind::Syntax, "expected " + expected + ", found " + describe(t), line_no_, t.column);
    }

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    const Token& expect(Tok kind, const std::string& what) {
        if (peek().kind != kind)
            syntax(what);
        return next();
    }

    bool has_arrow() const {
        for (const auto& t : tokens_)
            if (t.kind == Tok::Arrow)
                return true;
        return false;
    }

    void parse_line() {
        if (peek().kind == Tok::End)
            return;
        const Token& head = expect(Tok::Ident, "rule id, priority or 'bp'");
        if (peek().kind == Tok::Greater) {
            next();
            parse_priority(head);
        } else if (peek().kind == Tok::Colon) {
            next();
            if (head.text == "bp" && !has_arrow())
                parse_burden();
            else
                parse_rule(head);
        } else {
            syntax("':' or '>'");
        }
        expect(Tok::End, "end of line");
    }

    std::pair<Literal, int> parse_literal_tok() {
        int col = peek().column;
        bool negated = false;
        if (peek().kind == Tok::Tilde) {
            next();
            negated = true;
        }
        const Token& atom = expect(Tok::Ident, "literal");
        return {Literal(atom.text, negated), col};
    }

    void parse_rule(const Token& id) {
        std::vector<Literal> body;
        if (peek().kind != Tok::Arrow) {
            body.push_back(parse_literal_tok().first);
            while (peek().kind == Tok::Comma) {
                next();
                body.push_back(parse_literal_tok().first);
            }
        }
        expect(Tok::Arrow, "',' or '=>'");
        Literal head = parse_literal_tok().first;
        if (!seen_rules_.insert(id.text).second)
            fail(TheoryErrorKind::DuplicateRuleId, "rule '" + id.text + "' declared twice", line_no_, id.column);
        rules_.push_back(Rule{id.text, std::move(body), std::move(head)});
    }

    void parse_priority(const Token& winner) {
        const Token& loser = expect(Tok::Ident, "rule id");
        if (winner.text == loser.text)
            fail(TheoryErrorKind::ReflexivePriority, "rule '" + winner.text + "' cannot be superior to itself",
                 line_no_, winner.column);
        if (superiority_.contains({loser.text, winner.text}))
            fail(TheoryErrorKind::SymmetricPriority,
                 loser.text + " > " + winner.text + " already declared", line_no_, winner.column);
        superiority_.emplace(winner.text, loser.text);
        priorities_.push_back({winner.text, loser.text, line_no_, winner.column, loser.column});
    }

    void parse_burden() {
        do {
            if (peek().kind == Tok::Comma)
                next();
            auto [x, col] = parse_literal_tok();
            if (burdens_.contains(x.complement()))
                fail(TheoryErrorKind::InconsistentBurden,
                     "both " + x.str() + " and " + x.complement().str() + " carry a burden", line_no_, col);
            burdens_.insert(std::move(x));
        } while (peek().kind == Tok::Comma);
    }

    int line_no_ = 0;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    std::vector<Rule> rules_;
    std::set<std::string> seen_rules_;
    SuperiorityRelation superiority_;
    std::vector<PendingPriority> priorities_;
    std::set<Literal> burdens_;
};

} // namespace

DefeasibleTheory parse_theory(std::istream& in) { return TheoryParser{}.parse(in); }

DefeasibleTheory parse_theory(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_theory(in);
}

} // namespace burden
