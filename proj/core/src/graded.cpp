#include "skewclifford/graded.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "skewclifford/errors.hpp"
#include "skewclifford/structure.hpp"

namespace skcl {

int GradedPresentation::degree_of_word(const Word& w) const {
    int d = 0;
    for (int l : w.letters) d += generators[static_cast<std::size_t>(l)].degree;
    return d;
}

void GradedPresentation::check_homogeneous() const {
    for (std::size_t r = 0; r < relations.size(); ++r) {
        for (const auto& [w, c] : relations[r].element.terms()) {
            if (degree_of_word(w) != relations[r].degree)
                throw PreconditionError("relation " + std::to_string(r + 1) +
                                        " is not homogeneous of degree " +
                                        std::to_string(relations[r].degree));
        }
    }
}

Element substitute(const Element& e, const std::vector<Element>& images) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element prod = Element::unit();
        for (int l : w.letters) prod = prod * images[static_cast<std::size_t>(l)];
        out += c * prod;
    }
    return out;
}

namespace {

std::vector<GradedGenerator> x_generators(int n) {
    std::vector<GradedGenerator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"X" + std::to_string(i + 1), 1});
    return gens;
}

bool mu_symmetric(const Mat& mu, const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != mu.at(i, j) * m.at(j, i)) return false;
    return true;
}

Mat flatten_rows(const std::vector<Mat>& ms) {
    int n = ms.empty() ? 0 : ms[0].rows();
    Mat flat(static_cast<int>(ms.size()), n * n);
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                flat.at(static_cast<int>(k), i * n + j) = ms[k].at(i, j);
    return flat;
}

void check_partition_invariants(const Presentation& p, const std::vector<Mat>& ms,
                                const Mat& target) {
    Mat sum(p.n(), p.n());
    for (const Mat& m : ms) {
        if (!mu_symmetric(p.mu(), m)) throw InternalError("partition block is not mu-symmetric");
        sum += m;
    }
    if (!(sum == target)) throw InternalError("partition blocks do not sum to 2B");
    if (rank(flatten_rows(ms)) != p.n())
        throw InternalError("partition blocks are not linearly independent");
}

std::vector<Mat> partition_rec(const Mat& d, std::vector<std::string>& trace) {
    const int n = d.rows();
    if (n == 1) {
        trace.push_back("n=1: base case");
        return {d};
    }
    std::vector<int> head(static_cast<std::size_t>(n - 1));
    std::iota(head.begin(), head.end(), 0);
    Mat dprime = d.submatrix(head);

    std::vector<Mat> out(static_cast<std::size_t>(n), Mat(n, n));
    auto embed = [n](const Mat& small) {
        Mat big(n, n);
        for (int i = 0; i < small.rows(); ++i)
            for (int j = 0; j < small.cols(); ++j) big.at(i, j) = small.at(i, j);
        return big;
    };

    if (!dprime.is_zero()) {
        std::vector<Mat> sub = partition_rec(dprime, trace);
        bool last_nonzero = false;
        for (int i = 0; i < n; ++i)
            if (!d.at(i, n - 1).is_zero() || !d.at(n - 1, i).is_zero()) last_nonzero = true;
        if (last_nonzero) {
            trace.push_back("n=" + std::to_string(n) + ": case I (D' != 0, last column nonzero)");
            for (int k = 0; k < n - 1; ++k) out[static_cast<std::size_t>(k)] = embed(sub[static_cast<std::size_t>(k)]);
            Mat& last = out[static_cast<std::size_t>(n - 1)];
            for (int i = 0; i < n; ++i) {
                last.at(i, n - 1) = d.at(i, n - 1);
                last.at(n - 1, i) = d.at(n - 1, i);
            }
        } else {
            trace.push_back("n=" + std::to_string(n) + ": case I (D' != 0, last column zero)");
            out[0] = embed(sub[0]);
            out[0].at(n - 1, n - 1) = Rat(1);
            for (int k = 1; k < n - 1; ++k) out[static_cast<std::size_t>(k)] = embed(sub[static_cast<std::size_t>(k)]);
            out[static_cast<std::size_t>(n - 1)].at(n - 1, n - 1) = Rat(-1);
        }
    } else {
        trace.push_back("n=" + std::to_string(n) + ": case II (D' = 0)");
        Mat rest = d;
        for (int k = 0; k < n - 1; ++k) {
            out[static_cast<std::size_t>(k)].at(k, k) = Rat(1);
            rest.at(k, k) -= Rat(1);
        }
        out[static_cast<std::size_t>(n - 1)] = rest;
    }
    return out;
}

}  // namespace

GradedPresentation homogenize_single(const Presentation& p) {
    const int n = p.n();
    GradedPresentation g;
    g.generators = x_generators(n);
    g.generators.push_back({"y", 2});
    const int y = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Element rel = Element::from_word(Word({i, j}));
            rel.add_term(Word({j, i}), p.mu(i, j));
            rel.add_term(Word::single(y), Rat(-2) * p.b(i, j));
            g.relations.push_back({std::move(rel), 2});
        }
    }
    for (int k = 0; k < n; ++k) {
        Element rel = Element::from_word(Word({y, k}));
        rel.add_term(Word({k, y}), Rat(-1));
        g.relations.push_back({std::move(rel), 3});
    }
    return g;
}

PartitionResult partition(const Presentation& p) {
    if (p.b().is_zero())
        throw PreconditionError("partition requires B != 0");
    PartitionResult res;
    Mat d = Rat(2) * p.b();
    res.matrices = partition_rec(d, res.case_trace);
    check_partition_invariants(p, res.matrices, d);
    return res;
}

GradedPresentation homogenize_multi(const Presentation& p, const std::vector<Mat>& ms) {
    const int n = p.n();
    if (static_cast<int>(ms.size()) != n)
        throw PreconditionError("expected exactly n matrices");
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (ms[k].rows() != n || ms[k].cols() != n)
            throw PreconditionError("matrix " + std::to_string(k + 1) + " is not n x n");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (ms[k].at(i, j) != p.mu(i, j) * ms[k].at(j, i))
                    throw PreconditionError("matrix " + std::to_string(k + 1) +
                                            " is not mu-symmetric at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
    }
    Mat sum(n, n);
    for (const Mat& m : ms) sum += m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sum.at(i, j) != Rat(2) * p.b(i, j))
                throw PreconditionError("matrices do not sum to 2B at (" + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")");

    GradedPresentation g;
    g.generators = x_generators(n);
    for (int k = 0; k < n; ++k) g.generators.push_back({"y" + std::to_string(k + 1), 2});
    auto y = [n](int k) { return n + k; };

    std::size_t quadratic = 0, centrality = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Element rel = Element::from_word(Word({i, j}));
            rel.add_term(Word({j, i}), p.mu(i, j));
            for (int k = 0; k < n; ++k)
                rel.add_term(Word::single(y(k)), -ms[static_cast<std::size_t>(k)].at(i, j));
            g.relations.push_back({std::move(rel), 2});
            ++quadratic;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            Element rel = Element::from_word(Word({y(k), i}));
            rel.add_term(Word({i, y(k)}), Rat(-1));
            g.relations.push_back({std::move(rel), 3});
            ++centrality;
        }
        for (int l = 0; l < n; ++l) {
            if (l == k) continue;
            Element rel = Element::from_word(Word({y(k), y(l)}));
            rel.add_term(Word({y(l), y(k)}), Rat(-1));
            g.relations.push_back({std::move(rel), 4});
            ++centrality;
        }
    }
    if (quadratic != static_cast<std::size_t>(n) * (n + 1) / 2 ||
        centrality != static_cast<std::size_t>(n) * (2 * n - 1))
        throw InternalError("relation counts of A(n) are off");
    return g;
}

AsregResult asreg_matrices(const Presentation& p) {
    const int n = p.n();
    TfaeReport rep = tfae(p);
    if (!rep.full_dimension)
        throw PreconditionError("regular homogenization requires full dimension 2^n");
    if (p.b().is_zero())
        throw PreconditionError("regular homogenization requires B != 0");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(p.mu(i, j) * p.mu(i, j)).is_one())
                throw PreconditionError("mu(" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")^2 != 1");

    bool diagonal = true;
    for (int i = 0; i < n && diagonal; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !p.b(i, j).is_zero()) { diagonal = false; break; }

    AsregResult res{{}, p, {}, {}, {}};
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rat> scales(static_cast<std::size_t>(n), Rat(1));

    if (diagonal) {
        res.trace.push_back("diagonal case");
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (!p.b(i, i).is_zero()) { first = i; break; }
        if (first > 0) {
            std::swap(order[0], order[static_cast<std::size_t>(first)]);
            res.trace.push_back("reordered so that B_11 != 0 (original generator " +
                                std::to_string(first + 1) + " moved to front)");
        }
    } else {
        res.trace.push_back("non-diagonal case");
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!p.b(i, j).is_zero()) { bi = i; bj = j; break; }
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (k != bi && k != bj) rest.push_back(k);
        order.clear();
        order.push_back(bi);
        order.push_back(bj);
        order.insert(order.end(), rest.begin(), rest.end());
        // If exactly one of B_11, B_22 vanishes, put it in position 2.
        if (p.b(bj, bj).is_zero() == false && p.b(bi, bi).is_zero())
            std::swap(order[0], order[1]);
        if (order[0] != 0 || order[1] != 1)
            res.trace.push_back("reordered so that B_12 != 0 (original generators " +
                                std::to_string(order[0] + 1) + "," + std::to_string(order[1] + 1) +
                                " moved to front)");
        Rat b12 = p.b(order[0], order[1]);
        scales[0] = b12.inv();
        if (!b12.is_one())
            res.trace.push_back("scaled first generator by 1/" + b12.str() +
                                " so that B_12 = 1");
    }

    Mat mu2(n, n), b2(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mu2.at(i, j) = p.mu(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
            b2.at(i, j) = scales[static_cast<std::size_t>(i)] * scales[static_cast<std::size_t>(j)] *
                          p.b(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
        }
    }
    res.normalized = validate(mu2, b2);
    res.normalization.scales = scales;
    for (int i = 0; i < n; ++i)
        res.normalization.order.push_back(order[static_cast<std::size_t>(i)] + 1);

    std::vector<Mat> ms(static_cast<std::size_t>(n), Mat(n, n));
    if (diagonal) {
        // (M_k)_kk = 2B_kk if B_kk != 0; -1 if k != 1 and B_kk = 0;
        // (M_1)_jj = 1 for 1 < j with B_jj = 0.
        for (int k = 0; k < n; ++k) {
            const Rat& bkk = b2.at(k, k);
            if (!bkk.is_zero())
                ms[static_cast<std::size_t>(k)].at(k, k) = Rat(2) * bkk;
            else if (k > 0)
                ms[static_cast<std::size_t>(k)].at(k, k) = Rat(-1);
            if (k > 0 && bkk.is_zero()) ms[0].at(k, k) = Rat(1);
        }
    } else {
        Mat& m1 = ms[0];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j && i == 0)
                    m1.at(i, j) = b2.at(0, 0).is_zero() ? Rat(1) : Rat(2) * b2.at(0, 0);
                else if (i == j)
                    m1.at(i, j) = b2.at(j, j).is_zero() ? Rat(-1) : Rat(0);
                else
                    m1.at(i, j) = Rat(2) * b2.at(i, j);
            }
        }
        for (int k = 1; k < n; ++k) {
            Mat& mk = ms[static_cast<std::size_t>(k)];
            mk.at(k, k) = b2.at(k, k).is_zero() ? Rat(1) : Rat(2) * b2.at(k, k);
            if (k == 1 && b2.at(0, 0).is_zero()) mk.at(0, 0) = Rat(-1);
        }
    }
    check_partition_invariants(res.normalized, ms, Rat(2) * b2);
    res.matrices = ms;

    // Map the partition back to the caller's basis: undo the scaling and the
    // permutation entrywise.
    for (const Mat& m : ms) {
        Mat back(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                back.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) =
                    m.at(i, j) / (scales[static_cast<std::size_t>(i)] * scales[static_cast<std::size_t>(j)]);
        res.matrices_original_basis.push_back(std::move(back));
    }
    check_partition_invariants(p, res.matrices_original_basis, Rat(2) * p.b());
    return res;
}

EliminationResult eliminate_y(const GradedPresentation& g, const std::vector<Mat>& ms) {
    int n = 0, ny = 0;
    for (const auto& gen : g.generators) {
        if (gen.degree == 1)
            ++n;
        else
            ++ny;
    }
    for (int i = 0; i < n; ++i)
        if (g.generators[static_cast<std::size_t>(i)].degree != 1)
            throw PreconditionError("degree-one generators must precede the degree-two ones");
    if (static_cast<int>(ms.size()) != ny)
        throw PreconditionError("expected one matrix per degree-two generator");

    // Rows of the linear system, one per pair i <= j; unknowns y_1..y_ny.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.push_back({i, j});
    const int rows = static_cast<int>(pairs.size());

    Mat aug(rows, ny + rows);
    for (int r = 0; r < rows; ++r) {
        auto [i, j] = pairs[static_cast<std::size_t>(r)];
        for (int k = 0; k < ny; ++k) aug.at(r, k) = ms[static_cast<std::size_t>(k)].at(i, j);
        aug.at(r, ny + r) = Rat(1);
    }
    RrefResult rr = rref(aug);
    for (int k = 0; k < ny; ++k)
        if (static_cast<int>(rr.pivots.size()) <= k || rr.pivots[static_cast<std::size_t>(k)] != k)
            throw PreconditionError("the matrices are linearly dependent; cannot solve for the y_k");

    // X-only part of each quadratic relation, in pair order.
    std::vector<Element> xparts(static_cast<std::size_t>(rows));
    {
        std::vector<bool> seen(static_cast<std::size_t>(rows), false);
        for (const auto& rel : g.relations) {
            if (rel.degree != 2) continue;
            Element xpart;
            std::vector<Rat> ycoeff(static_cast<std::size_t>(ny), Rat(0));
            for (const auto& [w, c] : rel.element.terms()) {
                if (w.length() == 1 && w.letters[0] >= n)
                    ycoeff[static_cast<std::size_t>(w.letters[0] - n)] = c;
                else
                    xpart.add_term(w, c);
            }
            // locate the pair this relation encodes via its y coefficients
            int row = -1;
            for (int r = 0; r < rows && row < 0; ++r) {
                if (seen[static_cast<std::size_t>(r)]) continue;
                auto [i, j] = pairs[static_cast<std::size_t>(r)];
                bool match = true;
                for (int k = 0; k < ny; ++k)
                    if (ycoeff[static_cast<std::size_t>(k)] != -ms[static_cast<std::size_t>(k)].at(i, j)) {
                        match = false;
                        break;
                    }
                if (match) row = r;
            }
            if (row < 0)
                throw PreconditionError(
                    "quadratic relation does not match the provided matrices");
            seen[static_cast<std::size_t>(row)] = true;
            xparts[static_cast<std::size_t>(row)] = std::move(xpart);
        }
        for (int r = 0; r < rows; ++r)
            if (!seen[static_cast<std::size_t>(r)])
                throw PreconditionError("missing quadratic relation for some pair (i, j)");
    }

    // y_k = sum over rows of the solving combination applied to the X parts.
    std::vector<Element> y_exprs(static_cast<std::size_t>(ny));
    for (int k = 0; k < ny; ++k) {
        Element expr;
        for (int r = 0; r < rows; ++r) {
            const Rat& t = rr.reduced.at(k, ny + r);
            if (!t.is_zero()) expr += t * xparts[static_cast<std::size_t>(r)];
        }
        y_exprs[static_cast<std::size_t>(k)] = std::move(expr);
    }

    std::vector<Element> images;
    for (int i = 0; i < n; ++i) images.push_back(Element::from_word(Word::single(i)));
    for (int k = 0; k < ny; ++k) images.push_back(y_exprs[static_cast<std::size_t>(k)]);

    EliminationResult res;
    res.presentation.generators = x_generators(n);
    for (const auto& rel : g.relations) {
        Element sub = substitute(rel.element, images);
        if (!sub.is_zero()) res.presentation.relations.push_back({std::move(sub), rel.degree});
    }
    res.presentation.check_homogeneous();
    res.y_exprs = std::move(y_exprs);
    return res;
}

namespace {

// All words of the given weighted degree over the graded alphabet, in a
// fixed deterministic order.
void enumerate_words(const GradedPresentation& g, int remaining, Word& cur,
                     std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t l = 0; l < g.generators.size(); ++l) {
        int dl = g.generators[l].degree;
        if (dl > remaining) continue;
        cur.letters.push_back(static_cast<int>(l));
        enumerate_words(g, remaining - dl, cur, out);
        cur.letters.pop_back();
    }
}

std::vector<Word> words_of_degree(const GradedPresentation& g, int e) {
    std::vector<Word> out;
    Word cur;
    enumerate_words(g, e, cur, out);
    return out;
}

// Incremental sparse row echelon over Q; returns true when the row enlarged
// the span (i.e. was independent of the rows inserted before it).
class SpanBuilder {
public:
    bool insert(std::map<int, Rat> row) {
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto piv = pivots_.find(lead);
            if (piv == pivots_.end()) {
                Rat c = row.begin()->second;
                for (auto& [col, v] : row) v /= c;
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            Rat f = row.begin()->second;
            for (const auto& [col, v] : piv->second) {
                auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -(f * v));
                } else {
                    it->second -= f * v;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
        return false;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, std::map<int, Rat>> pivots_;
};

std::map<int, Rat> element_row(const Element& e, const std::map<Word, int, DegLexLess>& index) {
    std::map<int, Rat> row;
    for (const auto& [w, c] : e.terms()) row[index.at(w)] = c;
    return row;
}

}  // namespace

HilbertPrefix hilbert_prefix(const GradedPresentation& g, int d, int cap) {
    if (d < 0) throw PreconditionError("negative degree");
    if (d > cap)
        throw PreconditionError("degree " + std::to_string(d) + " exceeds the cap " +
                                std::to_string(cap));
    g.check_homogeneous();
    HilbertPrefix hp;
    for (int e = 0; e <= d; ++e) {
        std::vector<Word> words = words_of_degree(g, e);
        std::map<Word, int, DegLexLess> index;
        for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
        SpanBuilder span;
        for (const auto& rel : g.relations) {
            if (rel.degree > e) continue;
            int budget = e - rel.degree;
            for (int a = 0; a <= budget; ++a) {
                for (const Word& u : words_of_degree(g, a)) {
                    Element left = Element::from_word(u) * rel.element;
                    for (const Word& v : words_of_degree(g, budget - a)) {
                        Element prod = left * Element::from_word(v);
                        span.insert(element_row(prod, index));
                    }
                }
            }
        }
        hp.coefficients.push_back(static_cast<std::uint64_t>(words.size()) -
                                  static_cast<std::uint64_t>(span.rank()));
    }
    return hp;
}

bool centrality_from_quadratic(const GradedPresentation& g,
                               const std::vector<Element>& candidates, int d, int cap) {
    if (d > cap)
        throw PreconditionError("degree " + std::to_string(d) + " exceeds the cap " +
                                std::to_string(cap));
    g.check_homogeneous();
    std::vector<const GradedRelation*> quad;
    for (const auto& rel : g.relations)
        if (rel.degree == 2) quad.push_back(&rel);

    for (const Element& c : candidates) {
        if (c.is_zero()) continue;
        int dc = -1;
        for (const auto& [w, coeff] : c.terms()) {
            int dw = g.degree_of_word(w);
            if (dc < 0) dc = dw;
            if (dw != dc) throw PreconditionError("centrality candidate is not homogeneous");
        }
        for (std::size_t x = 0; x < g.generators.size(); ++x) {
            if (g.generators[x].degree != 1) continue;
            Element gen = Element::from_word(Word::single(static_cast<int>(x)));
            Element comm = c * gen - gen * c;
            if (comm.is_zero()) continue;
            int e = dc + 1;
            if (e > d)
                throw PreconditionError("commutator degree " + std::to_string(e) +
                                        " exceeds the requested degree " + std::to_string(d));
            std::vector<Word> words = words_of_degree(g, e);
            std::map<Word, int, DegLexLess> index;
            for (std::size_t i = 0; i < words.size(); ++i)
                index.emplace(words[i], static_cast<int>(i));
            SpanBuilder span;
            for (const GradedRelation* rel : quad) {
                int budget = e - 2;
                for (int a = 0; a <= budget; ++a) {
                    for (const Word& u : words_of_degree(g, a)) {
                        Element left = Element::from_word(u) * rel->element;
                        for (const Word& v : words_of_degree(g, budget - a))
                            span.insert(element_row(left * Element::from_word(v), index));
                    }
                }
            }
            int base_rank = span.rank();
            span.insert(element_row(comm, index));
            if (span.rank() != base_rank) return false;  // commutator enlarges the span
        }
    }
    return true;
}

std::vector<Element> central_candidates_single(const Presentation& p) {
    const int n = p.n();
    if (p.b().is_zero()) return {};
    for (int i = 0; i < n; ++i) {
        if (!p.b(i, i).is_zero())
            return {p.b(i, i).inv() * Element::from_word(Word({i, i}))};
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!p.b(i, j).is_zero()) {
                Element c = Element::from_word(Word({i, j}));
                c.add_term(Word({j, i}), Rat(1));
                return {(Rat(2) * p.b(i, j)).inv() * c};
            }
        }
    }
    return {};
}

GradedPresentation lambda_presentation(const Mat& mu) {
    const int n = mu.rows();
    GradedPresentation g;
    g.generators = x_generators(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Element rel = Element::from_word(Word({i, j}));
            rel.add_term(Word({j, i}), mu.at(i, j));
            g.relations.push_back({std::move(rel), 2});
        }
    }
    return g;
}

GradedPresentation koszul_dual_presentation(const Mat& mu) {
    const int n = mu.rows();
    GradedPresentation g;
    for (int i = 0; i < n; ++i) g.generators.push_back({"z" + std::to_string(i + 1), 1});
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            // z_k z_i = mu_ik z_i z_k
            Element rel = Element::from_word(Word({k, i}));
            rel.add_term(Word({i, k}), -mu.at(i, k));
            g.relations.push_back({std::move(rel), 2});
        }
    }
    return g;
}

}  // namespace skcl
