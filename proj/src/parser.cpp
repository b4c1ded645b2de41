#include "pgsynth/parser.hpp"

#include <cctype>
#include <vector>

namespace pgsynth {
namespace {

enum class Tok { End, LPar, RPar, Not, And, Or, Impl, Iff, X, U, R, F, G, TT, FF, Id };

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string id;
    int tok_pos = 0;

    explicit Lexer(const std::string& t) : text(t) { advance(); }

    void advance() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
        tok_pos = (int)pos;
        if (pos == text.size()) { tok = Tok::End; return; }
        char c = text[pos];
        switch (c) {
            case '(': tok = Tok::LPar; pos++; return;
            case ')': tok = Tok::RPar; pos++; return;
            case '!': tok = Tok::Not; pos++; return;
            case '&': tok = Tok::And; pos++; if (pos < text.size() && text[pos] == '&') pos++; return;
            case '|': tok = Tok::Or; pos++; if (pos < text.size() && text[pos] == '|') pos++; return;
            case '-':
                if (pos + 1 < text.size() && text[pos + 1] == '>') { tok = Tok::Impl; pos += 2; return; }
                throw ParseError("unexpected '-'", (int)pos);
            case '<':
                if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') { tok = Tok::Iff; pos += 3; return; }
                throw ParseError("unexpected '<'", (int)pos);
            default: break;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_')) pos++;
            id = text.substr(start, pos - start);
            if (id == "X") tok = Tok::X;
            else if (id == "U") tok = Tok::U;
            else if (id == "R") tok = Tok::R;
            else if (id == "F") tok = Tok::F;
            else if (id == "G") tok = Tok::G;
            else if (id == "tt" || id == "true") tok = Tok::TT;
            else if (id == "ff" || id == "false") tok = Tok::FF;
            else tok = Tok::Id;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", (int)pos);
    }
};

// The binary levels parse positively; polarity is carried by parse_unary
// (for `!`, X, F, G) and resolved with nnf_not at parenthesis and iff
// boundaries. `temporal` marks the scope of X/U/R/F/G, where <-> is
// rewritten into (a&b)|(!a&!b); Iff nodes survive only at the Boolean layer.
struct Parser {
    Lexer lx;
    const Alphabet& sigma;

    Parser(const std::string& t, const Alphabet& s) : lx(t), sigma(s) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lx.tok_pos); }

    Formula parse_iff(bool pos, bool temporal) {
        Formula l = parse_impl(temporal);
        while (lx.tok == Tok::Iff) {
            lx.advance();
            Formula r = parse_impl(temporal);
            l = temporal ? iff_expand(l, r) : Formula::iff(l, r);
        }
        return pos ? l : nnf_not(l);
    }

    static Formula iff_expand(Formula a, Formula b) {
        return Formula::disj({Formula::conj({a, b}),
                              Formula::conj({nnf_not(a), nnf_not(b)})});
    }

    // Iff nodes can only occur in the and/or/iff skeleton above temporal
    // subformulas, so expanding them needs no traversal of X/U/R.
    static Formula expand_iffs(Formula f) {
        if (f.is(Kind::Iff)) return iff_expand(expand_iffs(f.kid(0)), expand_iffs(f.kid(1)));
        if (f.is(Kind::And) || f.is(Kind::Or)) {
            std::vector<Formula> kids;
            bool changed = false;
            for (Formula k : f.kids()) {
                kids.push_back(expand_iffs(k));
                changed |= !(kids.back() == k);
            }
            if (changed) return Formula::make(f.kind(), std::move(kids));
        }
        return f;
    }

    Formula parse_impl(bool temporal) {
        Formula l = parse_or(temporal);
        if (lx.tok == Tok::Impl) {
            lx.advance();
            Formula r = parse_impl(temporal);
            l = Formula::disj({nnf_not(l), r});
        }
        return l;
    }

    Formula parse_or(bool temporal) {
        std::vector<Formula> kids{parse_and(temporal)};
        while (lx.tok == Tok::Or) {
            lx.advance();
            kids.push_back(parse_and(temporal));
        }
        return kids.size() == 1 ? kids[0] : Formula::make(Kind::Or, std::move(kids));
    }

    Formula parse_and(bool temporal) {
        std::vector<Formula> kids{parse_until(temporal)};
        while (lx.tok == Tok::And) {
            lx.advance();
            kids.push_back(parse_until(temporal));
        }
        return kids.size() == 1 ? kids[0] : Formula::make(Kind::And, std::move(kids));
    }

    Formula parse_until(bool temporal) {
        Formula l = parse_unary(true, temporal);
        if (lx.tok == Tok::U || lx.tok == Tok::R) {
            bool is_u = lx.tok == Tok::U;
            lx.advance();
            l = expand_iffs(l);  // l was parsed before the scope became temporal
            Formula r = parse_until(true);
            return is_u ? Formula::until(l, r) : Formula::release(l, r);
        }
        return l;
    }

    Formula parse_unary(bool pos, bool temporal) {
        switch (lx.tok) {
            case Tok::Not: lx.advance(); return parse_unary(!pos, temporal);
            case Tok::X: lx.advance(); return Formula::next(parse_unary(pos, true));
            case Tok::F: lx.advance(); return pos ? Formula::eventually(parse_unary(true, true))
                                                  : Formula::always(parse_unary(false, true));
            case Tok::G: lx.advance(); return pos ? Formula::always(parse_unary(true, true))
                                                  : Formula::eventually(parse_unary(false, true));
            case Tok::TT: lx.advance(); return pos ? Formula::tt() : Formula::ff();
            case Tok::FF: lx.advance(); return pos ? Formula::ff() : Formula::tt();
            case Tok::LPar: {
                lx.advance();
                Formula f = parse_iff(pos, temporal);
                if (lx.tok != Tok::RPar) fail("expected ')'");
                lx.advance();
                return f;
            }
            case Tok::Id: {
                int ap = sigma.index_of(lx.id);
                if (ap < 0) fail("unknown proposition '" + lx.id + "'");
                lx.advance();
                return Formula::lit(ap, !pos);
            }
            default: fail("expected a formula");
        }
    }
};

}  // namespace

Formula parse(const std::string& text, const Alphabet& alphabet) {
    Parser p(text, alphabet);
    Formula f = p.parse_iff(true, false);
    if (p.lx.tok != Tok::End) p.fail("trailing input");
    return f;
}

}  // namespace pgsynth
