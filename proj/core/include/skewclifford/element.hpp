#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewclifford/rational.hpp"

namespace skcl {

/// A monomial of the free algebra: a finite sequence of generator indices
/// (0-based internally).  The empty word is the unit.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}
    static Word unit() { return Word(); }
    static Word single(int letter) { return Word({letter}); }

    int length() const { return static_cast<int>(letters.size()); }
    bool is_unit() const { return letters.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    Word subword(int pos, int len) const {
        return Word(std::vector<int>(letters.begin() + pos, letters.begin() + pos + len));
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return a.letters != b.letters; }
};

/// Degree-lexicographic order: shorter words first, then left-to-right by
/// letter index.  This is a monomial well-order compatible with
/// concatenation, with x_1 < x_2 < ... < x_n.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

inline bool deglex_less(const Word& a, const Word& b) { return DegLexLess{}(a, b); }

/// A finite Q-linear combination of words; canonical (no zero coefficients,
/// words stored in degree-lex order).
class Element {
public:
    using TermMap = std::map<Word, Rat, DegLexLess>;

    Element() = default;

    static Element zero() { return Element(); }
    static Element unit() { return monomial(Word::unit(), Rat(1)); }
    static Element from_word(const Word& w) { return monomial(w, Rat(1)); }
    static Element monomial(const Word& w, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Largest word under degree-lex; element must be nonzero.
    const Word& leading_word() const;
    const Rat& leading_coeff() const;
    /// Length of the leading word (0 for scalars); element must be nonzero.
    int degree() const { return leading_word().length(); }

    Rat coeff(const Word& w) const;
    void add_term(const Word& w, const Rat& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rat& c);
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    friend Element operator*(const Rat& c, Element e) { e *= c; return e; }
    Element operator-() const;

    /// Free-algebra (concatenation) product; no rewriting is applied.
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Display form with 1-based generator names, e.g. "2 - x1.x3".
    std::string str(const std::string& letter_prefix = "x") const;

private:
    TermMap terms_;
};

std::string word_str(const Word& w, const std::string& letter_prefix = "x");

}  // namespace skcl
