#include "skewclifford/structure.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "skewclifford/errors.hpp"
#include "skewclifford/rewrite.hpp"

namespace skcl {

namespace {

std::vector<int> nonzero_support(const LinearConsequence& lc) {
    std::vector<int> s;
    for (const auto& [idx, c] : lc.coefficients)
        if (!c.is_zero()) s.push_back(idx - 1);  // local 0-based
    return s;
}

std::string consequence_str(const LinearConsequence& lc) {
    std::ostringstream os;
    os << eq_kind_str(lc.kind) << "(";
    for (std::size_t i = 0; i < lc.indices.size(); ++i) os << (i ? "," : "") << lc.indices[i];
    os << "): " << lc.element().str() << " = 0";
    return os.str();
}

Rat rat_pow(const Rat& base, int e) {
    Rat r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

ReductionResult reduce_presentation(const Presentation& p) {
    ReductionResult res;
    std::vector<int> keep(static_cast<std::size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i) keep[static_cast<std::size_t>(i)] = i;

    auto original = [&keep](int local) { return keep[static_cast<std::size_t>(local)] + 1; };

    auto finish_trivial = [&res](std::string detail) {
        res.outcome = ReductionOutcome::Trivial;
        res.subset.clear();
        res.trace.push_back({"trivial", {}, 0, std::move(detail)});
        return res;
    };

    while (true) {
        Presentation sub = p.restrict(keep);
        const int m = sub.n();
        std::vector<LinearConsequence> cons = linear_consequences(sub);
        if (cons.empty()) {
            res.outcome = ReductionOutcome::Reduced;
            for (int local = 0; local < m; ++local) res.subset.push_back(original(local));
            res.mu_prime = sub.mu();
            res.b_prime = sub.b();
            if (!star_condition(sub).holds)
                throw InternalError("reduced presentation fails condition *");
            return res;
        }

        // Case (i): a consequence forcing x_j = 0.
        const LinearConsequence* single = nullptr;
        const LinearConsequence* pair = nullptr;
        for (const auto& lc : cons) {
            std::size_t s = nonzero_support(lc).size();
            if (s == 1 && !single) single = &lc;
            if (s == 2 && !pair) pair = &lc;
        }

        if (single) {
            int j = nonzero_support(*single)[0];
            for (int k = 0; k < m; ++k) {
                if (!sub.b(j, k).is_zero())
                    return finish_trivial("x" + std::to_string(original(j)) + " = 0 from " +
                                          consequence_str(*single) + " but B(" +
                                          std::to_string(original(j)) + "," +
                                          std::to_string(original(k)) + ") != 0");
            }
            res.trace.push_back({"case-i", {original(j)}, 0,
                                 "x" + std::to_string(original(j)) + " = 0 from " +
                                     consequence_str(*single)});
            keep.erase(keep.begin() + j);
            continue;
        }

        if (!pair)
            throw InternalError(
                "case (iii): only three-term consequences remain, which the proof rules out");

        // Case (ii): x_v = lambda x_u.  Gather the whole proportionality
        // class reachable through two-term consequences, so generators tied
        // to the same line are handled together.
        std::vector<std::vector<std::pair<int, Rat>>> adj(static_cast<std::size_t>(m));
        for (const auto& lc : cons) {
            std::vector<int> s = nonzero_support(lc);
            if (s.size() != 2) continue;
            int u = s[0], v = s[1];
            Rat cu = lc.coefficients.at(u + 1);
            Rat cv = lc.coefficients.at(v + 1);
            // c_u x_u + c_v x_v = 0
            adj[static_cast<std::size_t>(u)].push_back({v, -(cu / cv)});  // x_v = (-cu/cv) x_u
            adj[static_cast<std::size_t>(v)].push_back({u, -(cv / cu)});
        }

        std::vector<int> s0 = nonzero_support(*pair);
        int seed = std::min(s0[0], s0[1]);
        // BFS for the connected component and the ratio of each member to
        // the seed; ratio conflicts mean the whole class is zero.
        std::vector<bool> in_comp(static_cast<std::size_t>(m), false);
        std::vector<Rat> ratio(static_cast<std::size_t>(m), Rat(0));
        bool forced_zero = false;
        in_comp[static_cast<std::size_t>(seed)] = true;
        ratio[static_cast<std::size_t>(seed)] = Rat(1);
        std::deque<int> bfs{seed};
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            for (const auto& [v, lam] : adj[static_cast<std::size_t>(u)]) {
                Rat rv = lam * ratio[static_cast<std::size_t>(u)];
                if (!in_comp[static_cast<std::size_t>(v)]) {
                    in_comp[static_cast<std::size_t>(v)] = true;
                    ratio[static_cast<std::size_t>(v)] = rv;
                    bfs.push_back(v);
                } else if (ratio[static_cast<std::size_t>(v)] != rv) {
                    forced_zero = true;
                }
            }
        }
        std::vector<int> comp;
        for (int i = 0; i < m; ++i)
            if (in_comp[static_cast<std::size_t>(i)]) comp.push_back(i);

        if (forced_zero) {
            // Conflicting ratios collapse the class to zero; treat every
            // member as case (i).
            std::vector<int> removed;
            for (int c : comp) {
                for (int k = 0; k < m; ++k) {
                    if (!sub.b(c, k).is_zero())
                        return finish_trivial(
                            "ratio conflict forces x" + std::to_string(original(c)) +
                            " = 0 but B(" + std::to_string(original(c)) + "," +
                            std::to_string(original(k)) + ") != 0");
                }
                removed.push_back(original(c));
            }
            res.trace.push_back(
                {"case-i", removed, 0, "ratio conflict: proportionality class is zero"});
            std::vector<int> next;
            for (int i = 0; i < m; ++i)
                if (!in_comp[static_cast<std::size_t>(i)]) next.push_back(keep[static_cast<std::size_t>(i)]);
            keep = std::move(next);
            continue;
        }

        int rep = comp.front();  // smallest index of the class
        // Scalar compatibility inside the class: each relation
        // x_a x_b + mu_ab x_b x_a = 2 B_ab must reduce to a true scalar
        // identity under x_a = lambda_a x_rep.
        for (std::size_t ai = 0; ai < comp.size(); ++ai) {
            for (std::size_t bi = ai; bi < comp.size(); ++bi) {
                int a = comp[ai], b = comp[bi];
                Rat lhs = Rat(2) * sub.b(a, b);
                Rat rhs = ratio[static_cast<std::size_t>(a)] * ratio[static_cast<std::size_t>(b)] *
                          (Rat(1) + sub.mu(a, b)) * sub.b(rep, rep);
                if (lhs != rhs)
                    return finish_trivial("scalar identity fails for pair (" +
                                          std::to_string(original(a)) + "," +
                                          std::to_string(original(b)) +
                                          ") under the forced proportionalities");
            }
        }
        // Cross compatibility with the untouched generators: mu_ak = mu_rk
        // and B_ak = lambda_a B_rk.
        for (int a : comp) {
            if (a == rep) continue;
            for (int k = 0; k < m; ++k) {
                if (in_comp[static_cast<std::size_t>(k)]) continue;
                if (sub.mu(a, k) != sub.mu(rep, k))
                    return finish_trivial("mu(" + std::to_string(original(a)) + "," +
                                          std::to_string(original(k)) + ") != mu(" +
                                          std::to_string(original(rep)) + "," +
                                          std::to_string(original(k)) +
                                          ") with x" + std::to_string(original(a)) +
                                          " proportional to x" + std::to_string(original(rep)));
                if (sub.b(a, k) != ratio[static_cast<std::size_t>(a)] * sub.b(rep, k))
                    return finish_trivial("B(" + std::to_string(original(a)) + "," +
                                          std::to_string(original(k)) +
                                          ") incompatible with the forced proportionality");
            }
        }
        std::vector<int> removed;
        for (int c : comp)
            if (c != rep) removed.push_back(original(c));
        res.trace.push_back({"case-ii", removed, original(rep),
                             "proportionality class of " + consequence_str(*pair)});
        std::vector<int> next;
        for (int i = 0; i < m; ++i)
            if (!in_comp[static_cast<std::size_t>(i)] || i == rep)
                next.push_back(keep[static_cast<std::size_t>(i)]);
        keep = std::move(next);
    }
}

std::pair<Rat, SkewPolyMonomial> skew_poly_normal_form(const Mat& mu, const Word& word) {
    const int n = mu.rows();
    Rat factor(1);
    // Every inversion (p < q, w_p > w_q) is resolved by one adjacent swap
    // z_a z_b = mu_ba z_b z_a; the total factor does not depend on the order
    // of the swaps.
    for (std::size_t q = 1; q < word.letters.size(); ++q) {
        for (std::size_t pidx = 0; pidx < q; ++pidx) {
            int a = word.letters[pidx], b = word.letters[q];
            if (a > b) factor *= mu.at(b, a);
        }
    }
    SkewPolyMonomial mono;
    mono.exponents.assign(static_cast<std::size_t>(n), 0);
    for (int l : word.letters) ++mono.exponents[static_cast<std::size_t>(l)];
    return {factor, mono};
}

namespace {

using SkewPoly = std::map<std::vector<int>, Rat>;

void skew_add(SkewPoly& p, const std::vector<int>& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// Product of sorted monomials: the scalar collects mu_ba^{e1_a * e2_b} for
// every pair a > b with a from the left factor and b from the right.
std::pair<Rat, std::vector<int>> skew_mono_mul(const Mat& mu, const std::vector<int>& e1,
                                               const std::vector<int>& e2) {
    Rat factor(1);
    const int n = static_cast<int>(e1.size());
    for (int a = 0; a < n; ++a) {
        if (e1[static_cast<std::size_t>(a)] == 0) continue;
        for (int b = 0; b < a; ++b) {
            if (e2[static_cast<std::size_t>(b)] == 0) continue;
            factor *= rat_pow(mu.at(b, a),
                              e1[static_cast<std::size_t>(a)] * e2[static_cast<std::size_t>(b)]);
        }
    }
    std::vector<int> e(e1);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[static_cast<std::size_t>(k)];
    return {factor, e};
}

}  // namespace

bool q_central(const Presentation& p) {
    const int n = p.n();
    SkewPoly q;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (p.b(i, j).is_zero()) continue;
            auto [c, mono] = skew_poly_normal_form(p.mu(), Word({i, j}));
            skew_add(q, mono.exponents, c * p.b(i, j));
        }
    }
    for (int k = 0; k < n; ++k) {
        std::vector<int> zk(static_cast<std::size_t>(n), 0);
        zk[static_cast<std::size_t>(k)] = 1;
        SkewPoly commutator;
        for (const auto& [e, c] : q) {
            auto [cl, el] = skew_mono_mul(p.mu(), zk, e);
            skew_add(commutator, el, c * cl);
            auto [cr, er] = skew_mono_mul(p.mu(), e, zk);
            skew_add(commutator, er, -(c * cr));
        }
        if (!commutator.empty()) return false;
    }
    return true;
}

TfaeReport tfae(const Presentation& p) {
    TfaeReport rep;
    RewriteSystem sys = complete(initial_system(p));

    if (sys.status() == SystemStatus::Trivial) {
        rep.g_injective = false;
        rep.dim = 0;
        rep.witnesses["linear-rules"] = "algebra is trivial";
    } else {
        auto lin = sys.linear_rules();
        rep.g_injective = lin.empty();
        rep.dim = std::uint64_t{1} << sys.surviving_generators().size();
        if (!lin.empty()) {
            std::ostringstream os;
            for (std::size_t i = 0; i < lin.size(); ++i)
                os << (i ? "; " : "") << word_str(lin[i].head) << " -> " << lin[i].body.str();
            rep.witnesses["linear-rules"] = os.str();
        }
    }
    rep.full_dimension = rep.dim == (std::uint64_t{1} << p.n());
    rep.witnesses["dimension"] = std::to_string(rep.dim);

    std::vector<LinearConsequence> cons = linear_consequences(p);
    rep.coefficients_vanish = cons.empty();
    if (!cons.empty())
        rep.witnesses["consequences"] =
            std::to_string(cons.size()) + " forced relation(s); first: " + consequence_str(cons[0]);

    rep.q_central = skcl::q_central(p);
    if (!rep.q_central) rep.witnesses["q-central"] = "q fails to commute with some z_k";

    if (rep.g_injective != rep.full_dimension || rep.full_dimension != rep.coefficients_vanish ||
        rep.coefficients_vanish != rep.q_central)
        throw InternalError("the four equivalent conditions disagree");
    return rep;
}

bool pbw_check(const Presentation& p, int d) {
    if (d < 0) throw PreconditionError("negative degree");
    ReductionResult rr = reduce_presentation(p);
    if (rr.outcome == ReductionOutcome::Trivial)
        throw PreconditionError("PBW check requested for a trivial algebra");
    std::size_t j = rr.subset.size();
    std::vector<std::uint64_t> profile = filtered_dimension_profile(p, d);
    std::uint64_t total = 0, binom = 1;
    for (int k = 0; k <= d; ++k) {
        if (static_cast<std::size_t>(k) <= j) {
            total += binom;
            binom = binom * (j - static_cast<std::size_t>(k)) / (static_cast<std::size_t>(k) + 1);
        }
        if (profile[static_cast<std::size_t>(k)] != total) return false;
    }
    return true;
}

std::pair<std::uint64_t, std::uint64_t> z2_dimensions(const Presentation& p) {
    std::pair<std::uint64_t, std::uint64_t> counts{0, 0};
    for (const Word& w : basis(p)) {
        if (w.length() % 2 == 0)
            ++counts.first;
        else
            ++counts.second;
    }
    return counts;
}

}  // namespace skcl
