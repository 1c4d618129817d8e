#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewclifford/element.hpp"
#include "skewclifford/presentation.hpp"

namespace skcl {

// Basis enumeration is exponential in the generator count; anything larger
// is rejected up front.
inline constexpr int kMaxGenerators = 24;

enum class SystemStatus { Initial, Confluent, Trivial };

struct RewriteRule {
    Word head;     // the reducible leading word
    Element body;  // replacement; every word strictly smaller than head
};

/// Rewriting system for sCl(V, mu, phi) over the tensor algebra, under the
/// degree-lexicographic order with x_1 < ... < x_n.
///
/// The initial system carries one rule per defining relation:
///   x_i x_i -> B_ii * 1
///   x_j x_i -> 2 B_ji * 1 - mu_ji x_i x_j     (j > i)
/// Completion repeatedly reduces every overlap ambiguity (x_j^2 x_i,
/// x_j x_i^2, x_k x_j x_i, and self-overlaps x_j^3) in its two ways.  A
/// nonzero difference is a new relation: a linear rule x_m -> lower terms, or
/// a scalar relation c*1 = 0 with c != 0, which makes the algebra trivial.
/// After each new rule the system is inter-reduced, so heads stay mutually
/// irreducible and inclusion ambiguities never survive a round.  Each
/// adjoined linear rule removes a generator from the irreducible words, so at
/// most n can be adjoined and completion terminates.
class RewriteSystem {
public:
    using RuleMap = std::map<Word, Element, DegLexLess>;

    static RewriteSystem initial(const Presentation& p);

    int n() const { return n_; }
    SystemStatus status() const { return status_; }
    const RuleMap& rules() const { return rules_; }
    std::vector<RewriteRule> quadratic_rules() const;
    std::vector<RewriteRule> linear_rules() const;
    const std::vector<std::string>& trace() const { return trace_; }

    /// Letters (0-based) without a linear rule; completed systems only.
    std::vector<int> surviving_generators() const;

    /// Rewrites e to an irreducible element with the current rules.  Public
    /// contract requires a Confluent system (use normal_form); completion
    /// uses this internally on intermediate systems.
    Element reduce(const Element& e) const;

    /// Fully reduced form of e; requires status() == Confluent, so the
    /// result is independent of reduction order.
    Element normal_form(const Element& e) const;

    /// Runs completion; no-op unless status() == Initial.
    void complete();

    /// Exact audit: reduces every overlap both ways and checks the results
    /// agree.  Requires a completed system.
    bool verify_confluence() const;

private:
    struct Overlap {
        Word word;    // A.B.C with h1 = A.B, h2 = B.C
        Word h1, h2;
        int split;    // |B|
    };

    struct Match {
        int pos;
        int head_len;
        const Element* body;
    };

    bool find_leftmost_match(const Word& w, Match& out) const;
    std::vector<Overlap> enumerate_overlaps() const;
    Element overlap_difference(const Overlap& ov) const;
    // Reduces the relation, orients it as a rule, and restores
    // inter-reducedness; returns false when a scalar relation c*1 = 0 turned
    // up (status set to Trivial).
    bool add_relation(Element e);

    int n_ = 0;
    SystemStatus status_ = SystemStatus::Initial;
    RuleMap rules_;
    std::vector<std::string> trace_;
    int max_head_len_ = 2;
};

RewriteSystem initial_system(const Presentation& p);
RewriteSystem complete(RewriteSystem sys);
Element normal_form(const RewriteSystem& sys, const Element& e);

/// 0 for trivial algebras, else 2^j where j counts surviving generators.
std::uint64_t dimension(const Presentation& p);

/// The irreducible words: all strictly increasing words over the surviving
/// generators, in degree-lex order.  Rejects trivial algebras.
std::vector<Word> basis(const Presentation& p);

Element multiply(const RewriteSystem& sys, const Element& a, const Element& b);
Element multiply(const Presentation& p, const Element& a, const Element& b);

/// F_0..F_d where F_k counts irreducible words of length <= k.
std::vector<std::uint64_t> filtered_dimension_profile(const Presentation& p, int d);

}  // namespace skcl
