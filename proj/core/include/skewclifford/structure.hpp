#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewclifford/element.hpp"
#include "skewclifford/matrix.hpp"
#include "skewclifford/presentation.hpp"

namespace skcl {

enum class ReductionOutcome { Trivial, Reduced };

struct ReductionStep {
    std::string case_name;     // "case-i" or "case-ii"
    std::vector<int> removed;  // 1-based original generator indices
    int representative = 0;    // case-ii only, 1-based original index
    std::string detail;
};

/// Outcome of the proof-case reduction: either the algebra is trivial, or it
/// is isomorphic to the skew Clifford algebra on the surviving subset, whose
/// restricted data satisfies condition * (hence has dimension 2^|subset|).
struct ReductionResult {
    ReductionOutcome outcome;
    std::vector<int> subset;  // 1-based surviving original indices, sorted
    Mat mu_prime, b_prime;    // restriction to the subset (Reduced only)
    std::vector<ReductionStep> trace;
};

/// Generator-elimination algorithm independent of the rewriting engine.
///
/// Iterates on the restricted data: while some coefficient of equations
/// (1)-(3) is nonzero, a forced relation x_j = 0 deletes a generator (or
/// proves triviality when its B-row is nonzero), and a forced proportionality
/// x_j = lambda x_i deletes the whole proportionality class at once after
/// checking the scalar and cross compatibility identities.  A three-term
/// consequence with no usable one- or two-term consequence cannot occur; this
/// is asserted.
ReductionResult reduce_presentation(const Presentation& p);

/// The four equivalent characterizations of full dimension, computed by four
/// separate routes and cross-checked; a disagreement is an engine bug.
struct TfaeReport {
    bool g_injective = false;         // no linear rules after completion
    bool full_dimension = false;      // dimension == 2^n
    bool coefficients_vanish = false; // linear_consequences(p) empty
    bool q_central = false;           // q = zBz^t central in the skew polynomial ring
    std::uint64_t dim = 0;
    std::map<std::string, std::string> witnesses;
};

TfaeReport tfae(const Presentation& p);

/// Monomial z_1^{e_1} ... z_n^{e_n} of the skew polynomial ring dual to
/// Lambda_mu(V).
struct SkewPolyMonomial {
    std::vector<int> exponents;
    friend bool operator==(const SkewPolyMonomial&, const SkewPolyMonomial&) = default;
};

/// Sorts a word in the z generators into ascending order.  The commutation
/// rule is z_k z_i = mu_ik z_i z_k for k != i, the convention under which
/// (z_i z_j) z_k = z_k (z_i z_j) = mu_ik mu_jk z_i z_j z_k.  Returns the
/// accumulated scalar and the exponent vector.
std::pair<Rat, SkewPolyMonomial> skew_poly_normal_form(const Mat& mu, const Word& word);

/// Whether q = z B z^t is central in the skew polynomial ring.
bool q_central(const Presentation& p);

/// Compares the filtered dimension profile of the algebra against the graded
/// profile of the quantum exterior algebra on the reduced subset (partial
/// sums of binomial coefficients), up to degree d.  Rejects trivial algebras.
bool pbw_check(const Presentation& p, int d);

/// Z_2-graded dimensions: counts of even- and odd-length basis words.
std::pair<std::uint64_t, std::uint64_t> z2_dimensions(const Presentation& p);

}  // namespace skcl
