#include "loopalg/textio.hpp"

#include <sstream>

namespace loopalg {

namespace {

constexpr const char* kTensorSign = "⊗"; // (x)

// Renders "coeff*body" term lists with " + " / " - " joins and unit
// coefficients suppressed.
class TermPrinter {
public:
    void term(const Rational& q, const std::string& body) {
        Rational a = abs(q);
        if (first_) {
            if (sgn(q) < 0)
                out_ << "-";
            first_ = false;
        } else {
            out_ << (sgn(q) < 0 ? " - " : " + ");
        }
        if (a != 1)
            out_ << rat_str(a) << "*";
        out_ << body;
    }
    std::string str() const { return first_ ? std::string("0") : out_.str(); }

private:
    std::ostringstream out_;
    bool first_ = true;
};

} // namespace

std::string show(const Signature& sig, const Word& w) {
    if (w.is_identity())
        return "1_" + std::to_string(w.source());
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        const Letter& l = w.letter(i);
        s += sig.gen_name(l.gen);
        if (l.exp < 0)
            s += "^-1";
    }
    return s;
}

std::string show(const Signature& sig, const CyclicWord& c) {
    return "|" + show(sig, c.rep()) + "|";
}

std::string show(const Signature& sig, const AlgElem& x) {
    TermPrinter p;
    for (const auto& [w, q] : x.terms())
        p.term(q, show(sig, w));
    return p.str();
}

std::string show(const Signature& sig, const TraceElem& t) {
    TermPrinter p;
    for (const auto& [c, q] : t.terms())
        p.term(q, show(sig, c));
    return p.str();
}

std::string show(const Signature& sig, const Tensor2& t) {
    TermPrinter p;
    for (const auto& [pq, q] : t.terms())
        p.term(q, show(sig, pq.first) + " " + kTensorSign + " " + show(sig, pq.second));
    return p.str();
}

std::string show(const Signature& sig, const TraceTensor2& t) {
    TermPrinter p;
    for (const auto& [uv, q] : t.terms())
        p.term(q, show(sig, uv.first) + " " + kTensorSign + " " + show(sig, uv.second));
    return p.str();
}

std::string show(const Signature& sig, const TripleTrace& t) {
    TermPrinter p;
    for (const auto& [xy, q] : t.left.terms())
        p.term(q, show(sig, xy.first) + " " + kTensorSign + " " + show(sig, xy.second));
    for (const auto& [xy, q] : t.right.terms())
        p.term(q, show(sig, xy.first) + " " + kTensorSign + " " + show(sig, xy.second));
    return p.str();
}

std::string show(const Signature& sig, const OneForm& omega) {
    TermPrinter p;
    for (const auto& [c, t] : omega.coeffs)
        for (const auto& [uw, q] : t.terms())
            p.term(q, show(sig, uw.first) + " * D[" + sig.gen_name(c) + "] * " +
                          show(sig, uw.second));
    return p.str();
}

namespace {

struct Token {
    std::size_t offset;
    int gen = -1;      // generator id, or -1 for an identity token
    int object = -1;   // object id for identity tokens
    long exponent = 1; // expanded exponent
};

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

} // namespace

Word parse_path(const Signature& sig, std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '*') {
            ++i;
            continue;
        }
        std::size_t start = i;
        std::size_t end = i;
        while (end < src.size() && is_word_char(src[end]))
            ++end;
        if (end == start)
            throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
        std::string_view ident = src.substr(start, end - start);
        Token tok;
        tok.offset = start;
        if (ident.size() >= 2 && ident[0] == '1' && ident[1] == '_') {
            std::size_t pos = 2;
            int obj = 0;
            if (pos == ident.size())
                throw ParseError(start, "malformed identity token '" + std::string(ident) + "'");
            for (; pos < ident.size(); ++pos) {
                if (ident[pos] < '0' || ident[pos] > '9')
                    throw ParseError(start, "malformed identity token '" + std::string(ident) + "'");
                obj = obj * 10 + (ident[pos] - '0');
            }
            if (obj >= sig.num_objects())
                throw ParseError(start, "object " + std::to_string(obj) +
                                            " out of range (signature has objects 0.." +
                                            std::to_string(sig.num_objects() - 1) + ")");
            tok.object = obj;
        } else {
            GenKind kind;
            switch (ident[0]) {
            case 'a': kind = GenKind::alpha; break;
            case 'b': kind = GenKind::beta; break;
            case 'g': kind = GenKind::gamma; break;
            case 'd': kind = GenKind::delta; break;
            case 'w': kind = GenKind::tensor_letter; break;
            default:
                throw ParseError(start, "unknown identifier '" + std::string(ident) + "'");
            }
            if (ident.size() < 2)
                throw ParseError(start, "unknown identifier '" + std::string(ident) + "'");
            int index = 0;
            for (std::size_t pos = 1; pos < ident.size(); ++pos) {
                if (ident[pos] < '0' || ident[pos] > '9')
                    throw ParseError(start, "unknown identifier '" + std::string(ident) + "'");
                index = index * 10 + (ident[pos] - '0');
            }
            int gen = sig.find(kind, index);
            if (gen < 0)
                throw ParseError(start, "generator '" + std::string(ident) +
                                            "' is not part of this signature");
            tok.gen = gen;
        }
        i = end;
        if (i < src.size() && src[i] == '^') {
            std::size_t exp_start = ++i;
            bool neg = false;
            if (i < src.size() && (src[i] == '-' || src[i] == '+')) {
                neg = src[i] == '-';
                ++i;
            }
            if (i >= src.size() || src[i] < '0' || src[i] > '9')
                throw ParseError(exp_start, "malformed exponent");
            long e = 0;
            for (; i < src.size() && src[i] >= '0' && src[i] <= '9'; ++i) {
                e = e * 10 + (src[i] - '0');
                if (e > 1000)
                    throw ParseError(exp_start, "exponent too large");
            }
            tok.exponent = neg ? -e : e;
            if (tok.object >= 0 && tok.exponent != 1)
                tok.exponent = 1; // identities absorb exponents
            if (tok.gen >= 0 && tok.exponent < 0 && !sig.invertible_letters())
                throw ParseError(exp_start, "tensor-algebra letters are not invertible");
        }
        tokens.push_back(tok);
    }
    if (tokens.empty())
        throw ParseError(0, "empty path expression");

    // Lower to a letter chain (identities contribute no letters but fix the
    // object), checking adjacent composability as we go.
    std::vector<Letter> letters;
    int current = -1; // target object so far, -1 before the first item
    int first_object = -1;
    auto check = [&](int source, const Token& tok, const std::string& what) {
        if (current >= 0 && current != source)
            throw ParseError(tok.offset, "non-composable adjacency: previous item ends at object " +
                                             std::to_string(current) + " but " + what +
                                             " starts at object " + std::to_string(source));
    };
    for (const Token& tok : tokens) {
        if (tok.object >= 0) {
            check(tok.object, tok, "identity 1_" + std::to_string(tok.object));
            current = tok.object;
            if (first_object < 0)
                first_object = tok.object;
            continue;
        }
        if (tok.exponent == 0) {
            int obj = sig.gen(tok.gen).source;
            check(obj, tok, "'" + sig.gen_name(tok.gen) + "^0'");
            current = obj;
            if (first_object < 0)
                first_object = obj;
            continue;
        }
        int exp_sign = tok.exponent > 0 ? 1 : -1;
        Letter l = sig.letter(tok.gen, exp_sign);
        check(l.src, tok, "'" + sig.gen_name(tok.gen) + "'");
        const long reps = tok.exponent > 0 ? tok.exponent : -tok.exponent;
        if (reps >= 2 && l.src != l.tgt)
            throw ParseError(tok.offset, "non-composable adjacency: '" + sig.gen_name(tok.gen) +
                                             "' ends at object " + std::to_string(l.tgt) +
                                             " but starts at object " + std::to_string(l.src));
        for (long k = 0; k < reps; ++k)
            letters.push_back(l);
        current = l.tgt;
        if (first_object < 0)
            first_object = l.src;
    }
    return Word::of_letters(letters, first_object);
}

} // namespace loopalg
