#include "skewclifford/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "skewclifford/errors.hpp"

namespace skcl {

namespace {

std::string coords(int i, int j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

// Scalar-multiple comparison on the nonzero support of two coefficient maps.
bool proportional(const std::map<int, Rat>& a, const std::map<int, Rat>& b) {
    std::map<int, Rat> na, nb;
    for (const auto& [i, c] : a)
        if (!c.is_zero()) na.emplace(i, c);
    for (const auto& [i, c] : b)
        if (!c.is_zero()) nb.emplace(i, c);
    if (na.size() != nb.size()) return false;
    if (na.empty()) return true;
    auto ia = na.begin();
    auto ib = nb.begin();
    Rat ratio = ia->second / ib->second;
    for (; ia != na.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ratio * ib->second) return false;
    }
    return true;
}

}  // namespace

Presentation validate(const Mat& mu_raw, const Mat& b_raw) {
    std::vector<Violation> v;
    if (mu_raw.rows() != mu_raw.cols() || b_raw.rows() != b_raw.cols() ||
        mu_raw.rows() != b_raw.rows()) {
        throw ValidationError("mu and B must be square matrices of equal size");
    }
    int n = mu_raw.rows();
    if (n < 1) throw ValidationError("generator count must be at least 1");

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (mu_raw.at(i, j).is_zero())
                v.push_back({"mu-zero-entry", {i + 1, j + 1},
                             "mu" + coords(i + 1, j + 1) + " = 0"});
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!mu_raw.at(i, i).is_one())
            v.push_back({"mu-diagonal", {i + 1, i + 1},
                         "mu" + coords(i + 1, i + 1) + " = " + mu_raw.at(i, i).str() + " != 1"});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rat prod = mu_raw.at(i, j) * mu_raw.at(j, i);
            if (!prod.is_one())
                v.push_back({"mu-antisymmetry", {i + 1, j + 1},
                             "mu" + coords(i + 1, j + 1) + "*mu" + coords(j + 1, i + 1) + " = " +
                                 prod.str() + " != 1"});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (mu_raw.at(i, j).is_zero()) continue;  // already reported
            if (b_raw.at(i, j) != mu_raw.at(i, j) * b_raw.at(j, i))
                v.push_back({"b-mu-symmetry", {i + 1, j + 1},
                             "B" + coords(i + 1, j + 1) + " != mu" + coords(i + 1, j + 1) + "*B" +
                                 coords(j + 1, i + 1)});
        }
    }
    if (!v.empty()) throw ValidationError("invalid presentation", std::move(v));
    return Presentation(mu_raw, b_raw);
}

Presentation Presentation::restrict(const std::vector<int>& keep) const {
    return Presentation(mu_.submatrix(keep), b_.submatrix(keep));
}

StarReport star_condition(const Presentation& p) {
    StarReport rep;
    int n = p.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (p.b(i, j).is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                if (p.mu(i, k) != p.mu(k, j))
                    rep.violations.push_back({i + 1, j + 1, k + 1});
            }
        }
    }
    rep.holds = rep.violations.empty();
    return rep;
}

Element LinearConsequence::element() const {
    Element e;
    for (const auto& [idx, c] : coefficients) e.add_term(Word::single(idx - 1), c);
    return e;
}

std::vector<LinearConsequence> linear_consequences(const Presentation& p) {
    const int n = p.n();
    std::vector<LinearConsequence> out;

    auto try_emit = [&out](LinearConsequence lc) {
        bool nonzero = false;
        for (const auto& [idx, c] : lc.coefficients) nonzero = nonzero || !c.is_zero();
        if (!nonzero) return;
        for (const auto& prev : out)
            if (proportional(prev.coefficients, lc.coefficients)) return;
        out.push_back(std::move(lc));
    };

    const Rat two(2);
    // Equation (1):  2(1 - mu_ij) B_ij x_i = (1 - mu_ij^2) B_ii x_j
    // Equation (2):  2(1 - mu_ij) B_ij x_j = (1 - mu_ij^2) B_jj x_i
    // stored in element form (LHS - RHS = 0).
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rat m = p.mu(i, j);
            Rat om = Rat(1) - m;
            Rat om2 = Rat(1) - m * m;
            LinearConsequence e1{EqKind::Eq1, {i + 1, j + 1}, {}};
            e1.coefficients[i + 1] = two * om * p.b(i, j);
            e1.coefficients[j + 1] = -(om2 * p.b(i, i));
            try_emit(std::move(e1));
            LinearConsequence e2{EqKind::Eq2, {i + 1, j + 1}, {}};
            e2.coefficients[j + 1] = two * om * p.b(i, j);
            e2.coefficients[i + 1] = -(om2 * p.b(j, j));
            try_emit(std::move(e2));
        }
    }
    // Equation (3), all ordered triples of distinct indices:
    //   (1 - mu_ij mu_ik) B_jk x_i + (mu_ij - mu_jk) B_ik x_j
    //     = (1 - mu_jk mu_ik) B_ij x_k
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                LinearConsequence e3{EqKind::Eq3, {i + 1, j + 1, k + 1}, {}};
                e3.coefficients[i + 1] = (Rat(1) - p.mu(i, j) * p.mu(i, k)) * p.b(j, k);
                e3.coefficients[j + 1] = (p.mu(i, j) - p.mu(j, k)) * p.b(i, k);
                e3.coefficients[k + 1] = -((Rat(1) - p.mu(j, k) * p.mu(i, k)) * p.b(i, j));
                try_emit(std::move(e3));
            }
        }
    }
    return out;
}

Presentation opposite(const Presentation& p) {
    return validate(p.mu().transpose(), p.b().transpose());
}

Rat quadratic_form(const Presentation& p, const Element& v) {
    std::vector<Rat> c(static_cast<std::size_t>(p.n()), Rat(0));
    for (const auto& [w, coeff] : v.terms()) {
        if (w.length() != 1)
            throw PreconditionError("quadratic form is defined on degree-one elements only");
        c[static_cast<std::size_t>(w.letters[0])] += coeff;
    }
    Rat val(0);
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j) val += c[i] * c[j] * p.b(i, j);
    return val;
}

std::string eq_kind_str(EqKind k) {
    switch (k) {
        case EqKind::Eq1: return "eq1";
        case EqKind::Eq2: return "eq2";
        case EqKind::Eq3: return "eq3";
    }
    return "?";
}

}  // namespace skcl
