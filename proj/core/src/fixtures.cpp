#include "skewclifford/fixtures.hpp"

#include <set>

#include "skewclifford/errors.hpp"

namespace skcl {

namespace {

Rat get(const std::map<std::string, Rat>& params, const std::string& key, const Rat& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

int get_int(const std::map<std::string, Rat>& params, const std::string& key, int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    for (int v = 0; v <= 64; ++v)
        if (it->second == Rat(v)) return v;
    throw ValidationError("parameter " + key + " must be a small non-negative integer");
}

void reject_unknown(const std::map<std::string, Rat>& params,
                    const std::set<std::string>& known) {
    for (const auto& [k, v] : params)
        if (!known.count(k))
            throw ValidationError("unknown parameter \"" + k + "\" for this fixture");
}

}  // namespace

Presentation make_fixture(const std::string& id, const std::map<std::string, Rat>& params) {
    if (id == "fdex1") {
        reject_unknown(params, {"a", "b"});
        Rat a = get(params, "a", Rat(2));
        Rat b = get(params, "b", Rat(1));
        if (a.is_zero()) throw ValidationError("fdex1 requires a != 0");
        Mat mu(3, 3), bm(3, 3);
        Rat ai = a.inv();
        Rat one(1);
        mu.at(0, 0) = one; mu.at(0, 1) = a;  mu.at(0, 2) = one;
        mu.at(1, 0) = ai;  mu.at(1, 1) = one; mu.at(1, 2) = a;
        mu.at(2, 0) = one; mu.at(2, 1) = ai;  mu.at(2, 2) = one;
        bm.at(0, 2) = b;
        bm.at(2, 0) = b;
        return validate(mu, bm);
    }
    if (id == "fdex2") {
        reject_unknown(params, {"n", "q"});
        int n = get_int(params, "n", 3);
        Rat q = get(params, "q", Rat(2));
        if (n < 1) throw ValidationError("fdex2 requires n >= 1");
        if (q.is_zero()) throw ValidationError("fdex2 requires q != 0");
        Mat mu(n, n), bm(n, n);
        for (int i = 0; i < n; ++i) {
            mu.at(i, i) = Rat(1);
            for (int j = i + 1; j < n; ++j) {
                mu.at(i, j) = q;
                mu.at(j, i) = q.inv();
            }
        }
        return validate(mu, bm);
    }
    if (id == "fdex3") {
        reject_unknown(params, {"n", "ones"});
        int n = get_int(params, "n", 3);
        if (n < 1) throw ValidationError("fdex3 requires n >= 1");
        int ones = get_int(params, "ones", n);
        if (ones > n) throw ValidationError("fdex3: ones exceeds n");
        Mat mu(n, n), bm(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) mu.at(i, j) = i == j ? Rat(1) : Rat(-1);
            if (i < ones) bm.at(i, i) = Rat(1);
        }
        return validate(mu, bm);
    }
    if (id == "inbetweenex1") {
        reject_unknown(params, {"mu12", "mu13", "mu23", "b14", "b24", "b34", "b44"});
        Rat m12 = get(params, "mu12", Rat(2));
        Rat m13 = get(params, "mu13", Rat(1));
        Rat m23 = get(params, "mu23", Rat(1));
        Rat b14 = get(params, "b14", Rat(1));
        Rat b24 = get(params, "b24", Rat(1));
        Rat b34 = get(params, "b34", Rat(1));
        Rat b44 = get(params, "b44", Rat(1));
        if (m12.is_zero() || m13.is_zero() || m23.is_zero())
            throw ValidationError("inbetweenex1 requires nonzero mu entries");
        if (b14.is_zero() || b24.is_zero() || b34.is_zero())
            throw ValidationError("inbetweenex1 requires B_i4 != 0");
        Mat mu(4, 4), bm(4, 4);
        Rat one(1);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) mu.at(i, j) = one;
        mu.at(0, 1) = m12; mu.at(1, 0) = m12.inv();
        mu.at(0, 2) = m13; mu.at(2, 0) = m13.inv();
        mu.at(1, 2) = m23; mu.at(2, 1) = m23.inv();
        bm.at(0, 3) = b14; bm.at(3, 0) = b14;
        bm.at(1, 3) = b24; bm.at(3, 1) = b24;
        bm.at(2, 3) = b34; bm.at(3, 2) = b34;
        bm.at(3, 3) = b44;
        return validate(mu, bm);
    }
    if (id == "zerodim") {
        reject_unknown(params, {});
        Mat mu(2, 2), bm(2, 2);
        mu.at(0, 0) = Rat(1); mu.at(0, 1) = Rat(-1);
        mu.at(1, 0) = Rat(-1); mu.at(1, 1) = Rat(1);
        bm.at(0, 1) = Rat(1);
        bm.at(1, 0) = Rat(-1);
        return validate(mu, bm);
    }
    if (id == "notsimple") {
        reject_unknown(params, {"a"});
        Rat a = get(params, "a", Rat(1));
        Mat mu(3, 3), bm(3, 3);
        Rat one(1), neg(-1);
        mu.at(0, 0) = one; mu.at(0, 1) = one; mu.at(0, 2) = neg;
        mu.at(1, 0) = one; mu.at(1, 1) = one; mu.at(1, 2) = neg;
        mu.at(2, 0) = neg; mu.at(2, 1) = neg; mu.at(2, 2) = one;
        bm.at(0, 1) = a;
        bm.at(1, 0) = a;
        bm.at(2, 2) = one;
        return validate(mu, bm);
    }
    if (id == "betweenex2") {
        reject_unknown(params, {});
        Mat mu(2, 2), bm(2, 2);
        mu.at(0, 0) = Rat(1); mu.at(0, 1) = Rat(2);
        mu.at(1, 0) = Rat(1, 2); mu.at(1, 1) = Rat(1);
        bm.at(1, 1) = Rat(1);
        return validate(mu, bm);
    }
    throw ValidationError("unknown fixture \"" + id + "\"");
}

const std::vector<std::string>& fixture_ids() {
    static const std::vector<std::string> ids = {
        "fdex1", "fdex2", "fdex3", "inbetweenex1", "zerodim", "notsimple", "betweenex2"};
    return ids;
}

}  // namespace skcl
