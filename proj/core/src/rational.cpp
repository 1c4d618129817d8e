#include "skewclifford/rational.hpp"

#include <cctype>
#include <ostream>

#include "skewclifford/errors.hpp"

namespace skcl {

namespace {

bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    return digits > 0 && i == s.size();
}

}  // namespace

Rat::Rat(long num, long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (!looks_like_rational(s))
        throw ValidationError("malformed rational \"" + s + "\" (expected \"p\" or \"p/q\")");
    mpq_class v(s);
    if (sgn(v.get_den()) == 0)
        throw ValidationError("rational \"" + s + "\" has zero denominator");
    v.canonicalize();
    return Rat(std::move(v));
}

Rat Rat::inv() const {
    if (is_zero()) throw PreconditionError("inversion of zero");
    return Rat(1) / *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace skcl
