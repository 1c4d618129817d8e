// Acceptance suite: one line per criterion, exact tolerances, nonzero exit
// when anything fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewclifford/fixtures.hpp"
#include "skewclifford/graded.hpp"
#include "skewclifford/matrix.hpp"
#include "skewclifford/presentation.hpp"
#include "skewclifford/rewrite.hpp"
#include "skewclifford/structure.hpp"
#include "test_support.hpp"

using namespace skcl;
using skcl::testing::pres;
using skcl::testing::random_presentation;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    int checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

std::uint64_t reduce_dim(const Presentation& p) {
    ReductionResult rr = reduce_presentation(p);
    return rr.outcome == ReductionOutcome::Trivial ? 0
                                                   : (std::uint64_t{1} << rr.subset.size());
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// The random suite shared by criteria 2-6: n <= 4, mu entries from
// {1, -1, 2, 1/2} completed to antisymmetry, B mu-symmetric with free
// entries in {-2..2}.
std::vector<Presentation> random_suite(std::size_t count) {
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<int> n_pick(1, 4);
    std::vector<Presentation> suite;
    suite.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
        suite.push_back(random_presentation(rng, n_pick(rng)));
    return suite;
}

Outcome criterion1_fixtures() {
    Outcome o;
    for (long a : {2L, 3L}) {
        for (long b : {0L, 1L}) {
            o.expect(dimension(make_fixture("fdex1", {{"a", Rat(a)}, {"b", Rat(b)}})) == 8,
                     "fdex1(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ") != 8");
        }
    }
    std::mt19937 rng(99);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            Mat mu = random_presentation(rng, n).mu();
            o.expect(dimension(validate(mu, Mat::zero(n, n))) == (std::uint64_t{1} << n),
                     "fdex2 at n=" + std::to_string(n) + " not full");
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int ones = 0; ones <= n; ++ones) {
            o.expect(dimension(make_fixture(
                         "fdex3", {{"n", Rat(static_cast<long>(n))},
                                   {"ones", Rat(static_cast<long>(ones))}})) ==
                         (std::uint64_t{1} << n),
                     "fdex3 n=" + std::to_string(n) + " not full");
        }
    }
    o.expect(dimension(make_fixture("inbetweenex1")) == 8, "inbetweenex1 default != 8");
    o.expect(dimension(make_fixture("inbetweenex1", {{"mu13", Rat(2)}})) == 4,
             "inbetweenex1 mu13=2 != 4");
    o.expect(dimension(make_fixture("inbetweenex1", {{"mu23", Rat(3)}})) == 4,
             "inbetweenex1 mu23=3 != 4");
    o.expect(dimension(make_fixture("zerodim")) == 0, "zerodim != 0");
    o.expect(dimension(make_fixture("notsimple", {{"a", Rat(0)}})) == 8, "notsimple(0) != 8");
    o.expect(dimension(make_fixture("notsimple", {{"a", Rat(1)}})) == 8, "notsimple(1) != 8");
    o.expect(dimension(make_fixture("betweenex2")) == 2, "betweenex2 != 2");
    return o;
}

Outcome criterion2_tfae(const std::vector<Presentation>& suite) {
    Outcome o;
    for (std::size_t t = 0; t < suite.size(); ++t) {
        const Presentation& p = suite[t];
        try {
            TfaeReport rep = tfae(p);  // throws InternalError if the four disagree
            std::uint64_t dim = rep.dim;
            bool power_of_two = dim == 0 || ((dim & (dim - 1)) == 0 && dim >= 2);
            o.expect(power_of_two, "dimension not in {0} U {2^j} at case " + std::to_string(t));
            o.expect(reduce_dim(p) == dim,
                     "reduction algorithm disagrees with rewriting at case " + std::to_string(t));
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception at case ") + std::to_string(t) + ": " + e.what());
        }
    }
    return o;
}

Outcome criterion3_symmetric(const std::vector<Presentation>& suite) {
    Outcome o;
    for (const Presentation& p : suite) {
        if (dimension(p) != (std::uint64_t{1} << p.n())) continue;
        bool sym = true;
        for (int i = 0; i < p.n(); ++i)
            for (int j = 0; j < p.n(); ++j) sym = sym && p.b(i, j) == p.b(j, i);
        o.expect(sym, "full dimension with asymmetric B");
    }
    return o;
}

Outcome criterion4_opposite(const std::vector<Presentation>& suite) {
    Outcome o;
    for (const Presentation& p : suite)
        o.expect(dimension(p) == dimension(opposite(p)), "opposite algebra dimension differs");
    return o;
}

Outcome criterion5_pbw(const std::vector<Presentation>& suite) {
    Outcome o;
    for (const Presentation& p : suite) {
        if (dimension(p) == 0) continue;
        o.expect(pbw_check(p, p.n()), "PBW profile mismatch");
    }
    return o;
}

Outcome criterion6_partition(const std::vector<Presentation>& suite) {
    Outcome o;
    for (const Presentation& p : suite) {
        if (p.b().is_zero()) continue;
        try {
            PartitionResult pr = partition(p);  // invariants asserted inside
            Mat sum(p.n(), p.n());
            for (const Mat& m : pr.matrices) {
                for (int i = 0; i < p.n(); ++i)
                    for (int j = 0; j < p.n(); ++j)
                        o.expect(m.at(i, j) == p.mu(i, j) * m.at(j, i),
                                 "partition block not mu-symmetric");
                sum += m;
            }
            o.expect(sum == Rat(2) * p.b(), "partition does not sum to 2B");
            Mat flat(p.n(), p.n() * p.n());
            for (int k = 0; k < p.n(); ++k)
                for (int i = 0; i < p.n(); ++i)
                    for (int j = 0; j < p.n(); ++j)
                        flat.at(k, i * p.n() + j) = pr.matrices[static_cast<std::size_t>(k)].at(i, j);
            o.expect(rank(flat) == p.n(), "partition blocks dependent");
        } catch (const std::exception& e) {
            o.expect(false, std::string("partition raised: ") + e.what());
        }
    }
    return o;
}

Outcome criterion7_regularity() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();

    auto check_pipeline = [&o](const std::string& label, const Presentation& p, int d) {
        try {
            AsregResult ar = asreg_matrices(p);
            GradedPresentation an = homogenize_multi(ar.normalized, ar.matrices);
            EliminationResult el = eliminate_y(an, ar.matrices);
            o.expect(centrality_from_quadratic(el.presentation, el.y_exprs, d, 8),
                     label + ": y_k not central from the quadratic relations");
            HilbertPrefix hp = hilbert_prefix(el.presentation, d, 8);
            for (int e = 0; e <= d; ++e)
                o.expect(hp.coefficients[static_cast<std::size_t>(e)] ==
                             binom(static_cast<std::uint64_t>(p.n() + e - 1),
                                   static_cast<std::uint64_t>(e)),
                         label + ": Hilbert prefix differs from 1/(1-t)^n at degree " +
                             std::to_string(e));
        } catch (const std::exception& e) {
            o.expect(false, label + " raised: " + e.what());
        }
    };

    // diagonal fixtures, n = 2 and 3, mu off-diagonal -1 (so mu^2 = 1)
    check_pipeline("diag n=2 B=diag(1,0)",
                   pres({{Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}},
                        {{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}),
                   5);
    check_pipeline("diag n=2 B=diag(1,1)",
                   pres({{Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}},
                        {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}),
                   5);
    check_pipeline("diag n=3 B=diag(1,1,0)",
                   pres({{Rat(1), Rat(-1), Rat(-1)},
                         {Rat(-1), Rat(1), Rat(-1)},
                         {Rat(-1), Rat(-1), Rat(1)}},
                        {{Rat(1), Rat(0), Rat(0)},
                         {Rat(0), Rat(1), Rat(0)},
                         {Rat(0), Rat(0), Rat(0)}}),
                   5);
    // non-diagonal worked cases: B_11 = B_22 = 0 with B_12 = 1, and B_11 != 0
    check_pipeline("nondiag n=2 B=[[0,1],[1,0]]",
                   pres({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                        {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}),
                   5);
    check_pipeline("nondiag n=2 B=[[2,1],[1,0]]",
                   pres({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                        {{Rat(2), Rat(1)}, {Rat(1), Rat(0)}}),
                   5);
    check_pipeline("nondiag n=3",
                   pres({{Rat(1), Rat(1), Rat(-1)},
                         {Rat(1), Rat(1), Rat(-1)},
                         {Rat(-1), Rat(-1), Rat(1)}},
                        {{Rat(0), Rat(1), Rat(0)},
                         {Rat(1), Rat(0), Rat(0)},
                         {Rat(0), Rat(0), Rat(0)}}),
                   5);

    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - start);
    o.expect(elapsed.count() <= 30, "regularity evidence exceeded the 30 s budget");
    return o;
}

Outcome criterion8_lambda_hilbert() {
    Outcome o;
    std::mt19937 rng(314159);
    for (int t = 0; t < 10; ++t) {
        Mat mu = random_presentation(rng, 4).mu();
        HilbertPrefix hp = hilbert_prefix(lambda_presentation(mu), 4, 8);
        for (int e = 0; e <= 4; ++e)
            o.expect(hp.coefficients[static_cast<std::size_t>(e)] ==
                         binom(4, static_cast<std::uint64_t>(e)),
                     "quantum exterior dimensions differ from C(4, e)");
    }
    return o;
}

Outcome criterion9_dehomogenization() {
    Outcome o;
    const std::pair<const char*, std::map<std::string, Rat>> fixtures[] = {
        {"fdex1", {{"a", Rat(2)}, {"b", Rat(1)}}},
        {"fdex1", {{"a", Rat(3)}, {"b", Rat(1)}}},
        {"fdex3", {}},
        {"inbetweenex1", {}},
        {"inbetweenex1", {{"mu13", Rat(2)}}},
        {"zerodim", {}},
        {"notsimple", {{"a", Rat(1)}}},
        {"betweenex2", {}},
    };
    for (const auto& [id, params] : fixtures) {
        Presentation p = make_fixture(id, params);
        const int n = p.n();
        GradedPresentation an = homogenize_multi(p, partition(p).matrices);
        std::vector<Element> images;
        for (int i = 0; i < n; ++i) images.push_back(Element::from_word(Word::single(i)));
        for (int k = 0; k < n; ++k) images.push_back(Element::unit());
        for (const auto& rel : an.relations) {
            if (rel.degree != 2) continue;
            const Word& lead = rel.element.leading_word();
            int i = std::min(lead.letters[0], lead.letters[1]);
            int j = std::max(lead.letters[0], lead.letters[1]);
            Element expect = Element::from_word(Word({i, j}));
            expect.add_term(Word({j, i}), p.mu(i, j));
            expect.add_term(Word::unit(), Rat(-2) * p.b(i, j));
            o.expect(substitute(rel.element, images) == expect,
                     std::string(id) + ": y_k = 1 does not recover the defining relation");
        }
    }
    return o;
}

Outcome criterion10_associativity() {
    Outcome o;
    std::mt19937 rng(777);
    const std::pair<const char*, std::map<std::string, Rat>> fixtures[] = {
        {"fdex1", {{"a", Rat(2)}, {"b", Rat(1)}}},
        {"fdex1", {{"a", Rat(3)}, {"b", Rat(0)}}},
        {"fdex2", {{"n", Rat(4)}}},
        {"fdex3", {}},
        {"inbetweenex1", {}},
        {"inbetweenex1", {{"mu13", Rat(2)}}},
        {"notsimple", {{"a", Rat(1)}}},
        {"betweenex2", {}},
        {"zerodim", {}},
    };
    for (const auto& [id, params] : fixtures) {
        Presentation p = make_fixture(id, params);
        RewriteSystem sys = complete(initial_system(p));
        if (sys.status() == SystemStatus::Trivial) continue;  // nothing to multiply
        o.expect(sys.verify_confluence(), std::string(id) + ": some overlap resolves unequally");
        std::vector<Word> ws = basis(p);
        std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
        for (int t = 0; t < 100; ++t) {
            Element a = Element::from_word(ws[pick(rng)]);
            Element b = Element::from_word(ws[pick(rng)]);
            Element c = Element::from_word(ws[pick(rng)]);
            o.expect(multiply(sys, multiply(sys, a, b), c) ==
                         multiply(sys, a, multiply(sys, b, c)),
                     std::string(id) + ": associativity failure");
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Row {
        int id;
        std::string label;
        Outcome outcome;
    };
    std::vector<Presentation> suite = random_suite(600);
    std::vector<Row> rows;
    rows.push_back({1, "bundled fixtures reproduce their exact dimensions", criterion1_fixtures()});
    rows.push_back({2, "TFAE agreement and reduction/rewriting equivalence on 600 random presentations",
                    criterion2_tfae(suite)});
    rows.push_back({3, "full dimension forces a symmetric B", criterion3_symmetric(suite)});
    rows.push_back({4, "opposite algebra has the same dimension", criterion4_opposite(suite)});
    rows.push_back({5, "every nontrivial algebra passes the PBW profile check", criterion5_pbw(suite)});
    rows.push_back({6, "partition into independent mu-symmetric blocks summing to 2B",
                    criterion6_partition(suite)});
    rows.push_back({7, "regular homogenizations: quadratic centrality and 1/(1-t)^n prefixes",
                    criterion7_regularity()});
    rows.push_back({8, "quantum exterior algebras have binomial graded dimensions",
                    criterion8_lambda_hilbert()});
    rows.push_back({9, "setting y_k = 1 recovers the defining relations", criterion9_dehomogenization()});
    rows.push_back({10, "multiplication associative; every overlap resolves identically",
                    criterion10_associativity()});

    int failures = 0;
    for (const Row& row : rows) {
        std::ostringstream line;
        line << "[" << (row.id < 10 ? " " : "") << row.id << "] "
             << (row.outcome.ok ? "PASS" : "FAIL") << "  " << row.label << " ("
             << row.outcome.checks << " checks)";
        if (!row.outcome.ok) {
            line << " -- " << row.outcome.note;
            ++failures;
        }
        std::cout << line.str() << "\n";
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
