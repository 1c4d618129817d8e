#include "skewclifford/element.hpp"

#include <sstream>

#include "skewclifford/errors.hpp"

namespace skcl {

Element Element::monomial(const Word& w, const Rat& c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(w, c);
    return e;
}

const Word& Element::leading_word() const {
    if (terms_.empty()) throw InternalError("leading_word of zero element");
    return terms_.rbegin()->first;
}

const Rat& Element::leading_coeff() const {
    if (terms_.empty()) throw InternalError("leading_coeff of zero element");
    return terms_.rbegin()->second;
}

Rat Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Element::add_term(const Word& w, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element& Element::operator*=(const Rat& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

Element Element::operator-() const {
    Element e = *this;
    for (auto& [w, v] : e.terms_) v = -v;
    return e;
}

Element operator*(const Element& a, const Element& b) {
    Element p;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) p.add_term(wa * wb, ca * cb);
    return p;
}

std::string word_str(const Word& w, const std::string& letter_prefix) {
    if (w.is_unit()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << '.';
        os << letter_prefix << (w.letters[i] + 1);
    }
    return os.str();
}

std::string Element::str(const std::string& letter_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat mag = c.sign() < 0 ? -c : c;
        if (w.is_unit()) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << '*';
            os << word_str(w, letter_prefix);
        }
        first = false;
    }
    return os.str();
}

}  // namespace skcl
