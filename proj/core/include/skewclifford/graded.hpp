#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewclifford/element.hpp"
#include "skewclifford/matrix.hpp"
#include "skewclifford/presentation.hpp"

namespace skcl {

inline constexpr int kDefaultDegreeCap = 6;

struct GradedGenerator {
    std::string name;
    int degree;  // 1 or 2
};

struct GradedRelation {
    Element element;  // over the graded generator alphabet (0-based letters)
    int degree;       // stated homogeneous degree
};

/// Homogeneous quadratic-type presentation: generators with degrees and a
/// list of homogeneous relations.
struct GradedPresentation {
    std::vector<GradedGenerator> generators;
    std::vector<GradedRelation> relations;

    int degree_of_word(const Word& w) const;
    /// Throws if some relation is not homogeneous of its stated degree.
    void check_homogeneous() const;
};

/// Replaces letter l of an element by images[l]; images must be homogeneous
/// if the result is to stay graded.
Element substitute(const Element& e, const std::vector<Element>& images);

/// Homogenization A: adjoins one central degree-two generator y (letter n).
/// Quadratic relations X_i X_j + mu_ij X_j X_i - 2 B_ij y for i <= j, plus
/// centrality relations y X_k - X_k y of degree 3.
GradedPresentation homogenize_single(const Presentation& p);

struct PartitionResult {
    std::vector<Mat> matrices;            // M_1 .. M_n
    std::vector<std::string> case_trace;  // constructive case used per level
};

/// Writes D = 2B as a sum of n linearly independent mu-symmetric matrices,
/// by the constructive induction on n: recurse on the upper-left block D',
/// splitting on D' != 0 and on whether the last row/column of D vanishes.
/// Requires B != 0.  The output partition is not the only possible one.
PartitionResult partition(const Presentation& p);

/// Nonstandard homogenization A(n) for a chosen partition sum M_k = 2B:
/// generators X_1..X_n (degree 1), y_1..y_n (degree 2, letters n..2n-1);
/// (n^2+n)/2 quadratic relations X_i X_j + mu_ij X_j X_i - sum_k (M_k)_ij y_k
/// and n(2n-1) centrality relations (y_k X_i - X_i y_k for all k, i and
/// y_k y_l - y_l y_k for all l != k).
GradedPresentation homogenize_multi(const Presentation& p, const std::vector<Mat>& ms);

struct AsregNormalization {
    std::vector<int> order;   // order[new] = 1-based original generator index
    std::vector<Rat> scales;  // new generator = scale * original generator
};

struct AsregResult {
    std::vector<Mat> matrices;         // partition of 2B for the normalized data
    Presentation normalized;           // reordered and rescaled presentation
    AsregNormalization normalization;
    std::vector<Mat> matrices_original_basis;  // same partition mapped back to the input basis
    std::vector<std::string> trace;
};

/// The matrices from the regularity construction: the diagonal-case formulas
/// when B is diagonal, otherwise the non-diagonal formulas after normalizing
/// so that B_12 = 1 (and B_22 = 0 when B_11 B_22 = 0).  Requires full
/// dimension, B != 0, and mu_ij^2 = 1 for all i, j.
AsregResult asreg_matrices(const Presentation& p);

struct EliminationResult {
    GradedPresentation presentation;  // on the degree-one generators only
    std::vector<Element> y_exprs;     // solved degree-2 expression of each y_k
};

/// Solves sum_k (M_k)_ij y_k = X_i X_j + mu_ij X_j X_i for the y_k (the
/// matrices must be linearly independent) and substitutes into every
/// relation, leaving a presentation on X_1..X_n with relations in degrees
/// 2, 3, 4.
EliminationResult eliminate_y(const GradedPresentation& g, const std::vector<Mat>& ms);

struct HilbertPrefix {
    std::vector<std::uint64_t> coefficients;  // graded dimensions 0..d
};

/// Exact graded dimensions of the quotient by the homogeneous relations:
/// dim_e = #(degree-e words) - rank{u r v : deg u + deg r + deg v = e}.
HilbertPrefix hilbert_prefix(const GradedPresentation& g, int d, int cap = kDefaultDegreeCap);

/// Whether [c, X] lies in the ideal generated by the degree-two relations of
/// g, for every candidate c and degree-one generator X; membership is decided
/// exactly in the commutator's degree.
bool centrality_from_quadratic(const GradedPresentation& g,
                               const std::vector<Element>& candidates, int d,
                               int cap = kDefaultDegreeCap);

/// Candidate expressions for the central generator y of homogenize_single,
/// by case: X_i^2 / B_ii for the first nonzero B_ii, else
/// (X_i X_j + X_j X_i) / (2 B_ij) for the first nonzero B_ij; empty for B = 0.
std::vector<Element> central_candidates_single(const Presentation& p);

/// Quantum exterior algebra Lambda_mu(V) as a graded presentation.
GradedPresentation lambda_presentation(const Mat& mu);

/// Its Koszul dual, the skew polynomial ring on z_1..z_n with
/// z_k z_i = mu_ik z_i z_k.
GradedPresentation koszul_dual_presentation(const Mat& mu);

}  // namespace skcl
