#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "skewclifford/matrix.hpp"
#include "skewclifford/presentation.hpp"

namespace skcl::testing {

inline Mat mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const Rat& v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

inline Presentation pres(std::initializer_list<std::initializer_list<Rat>> mu,
                         std::initializer_list<std::initializer_list<Rat>> b) {
    return validate(mat(mu), mat(b));
}

// Random valid presentation with mu entries from {1, -1, 2, 1/2} (completed
// to multiplicative antisymmetry) and B mu-symmetric with free entries in
// {-2..2}.
inline Presentation random_presentation(std::mt19937& rng, int n) {
    static const Rat mus[] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
    std::uniform_int_distribution<int> mu_pick(0, 3), b_pick(-2, 2);
    Mat mu(n, n), b(n, n);
    for (int i = 0; i < n; ++i) {
        mu.at(i, i) = Rat(1);
        for (int j = i + 1; j < n; ++j) {
            mu.at(i, j) = mus[mu_pick(rng)];
            mu.at(j, i) = mu.at(i, j).inv();
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            b.at(i, j) = Rat(b_pick(rng));
            b.at(j, i) = mu.at(j, i) * b.at(i, j);
        }
    }
    return validate(mu, b);
}

}  // namespace skcl::testing
