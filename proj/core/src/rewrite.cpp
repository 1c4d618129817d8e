#include "skewclifford/rewrite.hpp"

#include <algorithm>
#include <deque>

#include "skewclifford/errors.hpp"

namespace skcl {

namespace {

bool contains_subword(const Word& w, const Word& sub) {
    if (sub.length() > w.length()) return false;
    for (int pos = 0; pos + sub.length() <= w.length(); ++pos) {
        bool hit = true;
        for (int k = 0; k < sub.length(); ++k)
            if (w.letters[pos + k] != sub.letters[k]) { hit = false; break; }
        if (hit) return true;
    }
    return false;
}

bool element_mentions(const Element& e, const Word& sub) {
    for (const auto& [w, c] : e.terms())
        if (contains_subword(w, sub)) return true;
    return false;
}

}  // namespace

RewriteSystem RewriteSystem::initial(const Presentation& p) {
    if (p.n() > kMaxGenerators)
        throw PreconditionError("generator count exceeds the supported maximum of 24");
    RewriteSystem sys;
    sys.n_ = p.n();
    for (int i = 0; i < p.n(); ++i) {
        // x_i x_i -> B_ii
        sys.rules_.emplace(Word({i, i}), Element::monomial(Word::unit(), p.b(i, i)));
        for (int j = i + 1; j < p.n(); ++j) {
            // x_j x_i -> 2 B_ji - mu_ji x_i x_j
            Element body = Element::monomial(Word::unit(), Rat(2) * p.b(j, i));
            body.add_term(Word({i, j}), -p.mu(j, i));
            sys.rules_.emplace(Word({j, i}), std::move(body));
        }
    }
    return sys;
}

bool RewriteSystem::find_leftmost_match(const Word& w, Match& out) const {
    for (int pos = 0; pos < w.length(); ++pos) {
        int max_len = std::min(max_head_len_, w.length() - pos);
        for (int len = 1; len <= max_len; ++len) {
            auto it = rules_.find(w.subword(pos, len));
            if (it != rules_.end()) {
                out = Match{pos, len, &it->second};
                return true;
            }
        }
    }
    return false;
}

Element RewriteSystem::reduce(const Element& e) const {
    Element result;
    std::map<Word, Rat, DegLexLess> work(e.terms().begin(), e.terms().end());
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Rat c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        Match m;
        if (!find_leftmost_match(w, m)) {
            result.add_term(w, c);
            continue;
        }
        Word prefix = w.subword(0, m.pos);
        Word suffix = w.subword(m.pos + m.head_len, w.length() - m.pos - m.head_len);
        for (const auto& [bw, bc] : m.body->terms()) {
            Word nw = prefix * bw * suffix;
            auto [slot, inserted] = work.emplace(nw, c * bc);
            if (!inserted) {
                slot->second += c * bc;
                if (slot->second.is_zero()) work.erase(slot);
            }
        }
    }
    return result;
}

std::vector<RewriteSystem::Overlap> RewriteSystem::enumerate_overlaps() const {
    std::vector<Overlap> out;
    for (const auto& [h1, b1] : rules_) {
        for (const auto& [h2, b2] : rules_) {
            int max_split = std::min(h1.length(), h2.length()) - 1;
            for (int split = 1; split <= max_split; ++split) {
                bool match = true;
                for (int k = 0; k < split; ++k)
                    if (h1.letters[h1.length() - split + k] != h2.letters[k]) { match = false; break; }
                if (!match) continue;
                Word word = h1.subword(0, h1.length() - split) * h2;
                out.push_back(Overlap{std::move(word), h1, h2, split});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) {
        if (a.word != b.word) return deglex_less(a.word, b.word);
        if (a.h1 != b.h1) return deglex_less(a.h1, b.h1);
        if (a.h2 != b.h2) return deglex_less(a.h2, b.h2);
        return a.split < b.split;
    });
    return out;
}

Element RewriteSystem::overlap_difference(const Overlap& ov) const {
    Word prefix = ov.h1.subword(0, ov.h1.length() - ov.split);           // A
    Word tail = ov.h2.subword(ov.split, ov.h2.length() - ov.split);      // C
    const Element& body1 = rules_.at(ov.h1);
    const Element& body2 = rules_.at(ov.h2);
    Element way1 = reduce(body1 * Element::from_word(tail));
    Element way2 = reduce(Element::from_word(prefix) * body2);
    return way1 - way2;
}

bool RewriteSystem::add_relation(Element e) {
    std::deque<Element> queue;
    queue.push_back(std::move(e));
    while (!queue.empty()) {
        Element r = reduce(queue.front());
        queue.pop_front();
        if (r.is_zero()) continue;
        const Word lead = r.leading_word();
        if (lead.is_unit()) {
            trace_.push_back("derived " + r.str() + " = 0; algebra is trivial");
            status_ = SystemStatus::Trivial;
            rules_.clear();
            return false;
        }
        Element body = Element::from_word(lead) - r.leading_coeff().inv() * r;
        if (rules_.count(lead)) throw InternalError("reduced relation has a reducible lead");
        trace_.push_back("new rule " + word_str(lead) + " -> " + body.str());
        rules_.emplace(lead, std::move(body));
        std::vector<Word> revisit;
        for (const auto& [h, b] : rules_) {
            if (h == lead) continue;
            if ((h.length() > lead.length() && contains_subword(h, lead)) ||
                element_mentions(b, lead))
                revisit.push_back(h);
        }
        for (const Word& h : revisit) {
            Element rel = Element::from_word(h) - rules_.at(h);
            rules_.erase(h);
            trace_.push_back("revisit rule with head " + word_str(h));
            queue.push_back(std::move(rel));
        }
    }
    return true;
}

void RewriteSystem::complete() {
    if (status_ != SystemStatus::Initial) return;
    // Each round either finishes or eliminates a generator; the bound is a
    // guard against engine bugs, not a tuning knob.
    const int round_limit = 4 * (n_ + 2);
    for (int round = 0; round < round_limit; ++round) {
        bool found = false;
        for (const Overlap& ov : enumerate_overlaps()) {
            Element d = overlap_difference(ov);
            if (d.is_zero()) continue;
            trace_.push_back("overlap " + word_str(ov.word) + " unresolved: " + d.str() + " = 0");
            found = true;
            if (!add_relation(std::move(d))) return;  // trivial
            break;                                    // rules changed; rescan
        }
        if (!found) {
            status_ = SystemStatus::Confluent;
            return;
        }
    }
    throw InternalError("completion did not stabilize");
}

std::vector<RewriteRule> RewriteSystem::quadratic_rules() const {
    std::vector<RewriteRule> out;
    for (const auto& [h, b] : rules_)
        if (h.length() == 2) out.push_back({h, b});
    return out;
}

std::vector<RewriteRule> RewriteSystem::linear_rules() const {
    std::vector<RewriteRule> out;
    for (const auto& [h, b] : rules_)
        if (h.length() == 1) out.push_back({h, b});
    return out;
}

std::vector<int> RewriteSystem::surviving_generators() const {
    if (status_ != SystemStatus::Confluent)
        throw PreconditionError("surviving generators are defined for confluent systems only");
    std::vector<bool> eliminated(static_cast<std::size_t>(n_), false);
    for (const auto& [h, b] : rules_)
        if (h.length() == 1) eliminated[static_cast<std::size_t>(h.letters[0])] = true;
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (!eliminated[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

Element RewriteSystem::normal_form(const Element& e) const {
    if (status_ == SystemStatus::Trivial)
        throw PreconditionError("normal form requested in a trivial algebra");
    if (status_ != SystemStatus::Confluent)
        throw PreconditionError("normal form requires a completed system");
    return reduce(e);
}

bool RewriteSystem::verify_confluence() const {
    if (status_ != SystemStatus::Confluent)
        throw PreconditionError("confluence audit requires a completed system");
    for (const Overlap& ov : enumerate_overlaps())
        if (!overlap_difference(ov).is_zero()) return false;
    return true;
}

RewriteSystem initial_system(const Presentation& p) { return RewriteSystem::initial(p); }

RewriteSystem complete(RewriteSystem sys) {
    sys.complete();
    return sys;
}

Element normal_form(const RewriteSystem& sys, const Element& e) { return sys.normal_form(e); }

namespace {

// Structural audit of a completed nontrivial system: linear-rule heads are
// the eliminated letters and the quadratic heads are exactly x_j x_i for
// j >= i over the survivors.  Anything else would break the increasing-word
// basis and means the engine went wrong.
void check_completed_shape(const RewriteSystem& sys, const std::vector<int>& surv) {
    std::vector<bool> surviving(static_cast<std::size_t>(sys.n()), false);
    for (int s : surv) surviving[static_cast<std::size_t>(s)] = true;
    std::size_t quad = 0;
    for (const auto& [h, b] : sys.rules()) {
        if (h.length() == 1) continue;
        if (h.length() != 2) throw InternalError("completed system has a rule of degree > 2");
        int a = h.letters[0], c = h.letters[1];
        if (a < c || !surviving[static_cast<std::size_t>(a)] || !surviving[static_cast<std::size_t>(c)])
            throw InternalError("completed system has a non-standard quadratic head");
        ++quad;
    }
    std::size_t s = surv.size();
    if (quad != s * (s + 1) / 2)
        throw InternalError("completed system is missing quadratic rules");
}

}  // namespace

std::uint64_t dimension(const Presentation& p) {
    RewriteSystem sys = complete(initial_system(p));
    if (sys.status() == SystemStatus::Trivial) return 0;
    std::vector<int> surv = sys.surviving_generators();
    check_completed_shape(sys, surv);
    return std::uint64_t{1} << surv.size();
}

std::vector<Word> basis(const Presentation& p) {
    RewriteSystem sys = complete(initial_system(p));
    if (sys.status() == SystemStatus::Trivial)
        throw PreconditionError("trivial algebra has no basis");
    std::vector<int> surv = sys.surviving_generators();
    check_completed_shape(sys, surv);
    // All strictly increasing words over the survivors, degree-lex order.
    std::vector<Word> out;
    out.push_back(Word::unit());
    std::size_t s = surv.size();
    for (std::size_t len = 1; len <= s; ++len) {
        std::vector<int> pick(len);
        // lexicographic combinations of indices into surv
        std::vector<std::size_t> idx(len);
        for (std::size_t k = 0; k < len; ++k) idx[k] = k;
        while (true) {
            for (std::size_t k = 0; k < len; ++k) pick[k] = surv[idx[k]];
            out.push_back(Word(pick));
            std::size_t k = len;
            while (k > 0 && idx[k - 1] == s - len + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t m = k; m < len; ++m) idx[m] = idx[m - 1] + 1;
        }
    }
    if (out.size() != (std::size_t{1} << s))
        throw InternalError("basis enumeration does not match 2^j");
    return out;
}

Element multiply(const RewriteSystem& sys, const Element& a, const Element& b) {
    if (sys.status() == SystemStatus::Trivial)
        throw PreconditionError("multiplication requested in a trivial algebra");
    return sys.normal_form(a * b);
}

Element multiply(const Presentation& p, const Element& a, const Element& b) {
    return multiply(complete(initial_system(p)), a, b);
}

std::vector<std::uint64_t> filtered_dimension_profile(const Presentation& p, int d) {
    if (d < 0) throw PreconditionError("negative degree");
    RewriteSystem sys = complete(initial_system(p));
    if (sys.status() == SystemStatus::Trivial)
        throw PreconditionError("filtered profile requested for a trivial algebra");
    std::vector<int> surv = sys.surviving_generators();
    check_completed_shape(sys, surv);
    std::size_t s = surv.size();
    std::vector<std::uint64_t> profile;
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(s, k)
    for (int k = 0; k <= d; ++k) {
        if (static_cast<std::size_t>(k) <= s) {
            total += binom;
            binom = binom * (s - static_cast<std::size_t>(k)) / (static_cast<std::size_t>(k) + 1);
        }
        profile.push_back(total);
    }
    return profile;
}

}  // namespace skcl
