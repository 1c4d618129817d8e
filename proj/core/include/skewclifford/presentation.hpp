#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewclifford/element.hpp"
#include "skewclifford/matrix.hpp"

namespace skcl {

/// Validated input data (mu, B) for a skew Clifford algebra sCl(V, mu, phi).
///
/// mu is multiplicatively antisymmetric (mu_ij mu_ji = mu_ii = 1, all entries
/// nonzero) and B is mu-symmetric (B_ij = mu_ij B_ji); B_ij = phi(x_i, x_j).
/// Construct through validate(); instances are immutable afterwards.
class Presentation {
public:
    int n() const { return mu_.rows(); }
    const Mat& mu() const { return mu_; }
    const Mat& b() const { return b_; }

    /// 0-based accessors.
    const Rat& mu(int i, int j) const { return mu_.at(i, j); }
    const Rat& b(int i, int j) const { return b_.at(i, j); }

    /// Restriction to a subset of generators (0-based ascending indices).
    Presentation restrict(const std::vector<int>& keep) const;

    friend Presentation validate(const Mat& mu_raw, const Mat& b_raw);

private:
    Presentation(Mat mu, Mat b) : mu_(std::move(mu)), b_(std::move(b)) {}
    Mat mu_, b_;
};

/// Checks every invariant of the pair (mu, B) and returns the validated
/// presentation.  On failure throws ValidationError carrying one Violation
/// per broken invariant, with 1-based coordinates.
Presentation validate(const Mat& mu_raw, const Mat& b_raw);

struct StarViolation {
    int i, j, k;  // 1-based: B_ij != 0 but mu_ik != mu_kj
    friend bool operator==(const StarViolation&, const StarViolation&) = default;
};

/// Result of evaluating condition *: for all i, j with B_ij != 0 and all k,
/// mu_ik = mu_kj.  Holds exactly when the algebra has full dimension.
struct StarReport {
    bool holds = true;
    std::vector<StarViolation> violations;
};

StarReport star_condition(const Presentation& p);

enum class EqKind { Eq1, Eq2, Eq3 };

/// One forced linear relation among the generators, obtained by evaluating
/// the coefficient systems of the three ambiguity equations.  The element
/// form is sum_m coefficients[m] * x_m = 0 (indices 1-based).
struct LinearConsequence {
    EqKind kind;
    std::vector<int> indices;        // (i, j) or (i, j, k), 1-based
    std::map<int, Rat> coefficients; // closed-form coefficient of each involved x
    Element element() const;         // degree-1 element over 0-based letters
};

/// Evaluates equation (1) and (2) on every ordered pair i < j and equation
/// (3) on every ordered triple of distinct indices; keeps the instances with
/// some nonzero coefficient, deduplicated up to scalar multiple.  The list is
/// empty exactly when condition * holds.
std::vector<LinearConsequence> linear_consequences(const Presentation& p);

/// Presentation of the opposite algebra: (mu^t, B^t).
Presentation opposite(const Presentation& p);

/// The quadratic form Phi(v) = phi(v, v) evaluated on a degree-one element
/// v = sum c_i x_i; rejects elements with words of length != 1.
Rat quadratic_form(const Presentation& p, const Element& v);

std::string eq_kind_str(EqKind k);

}  // namespace skcl
