#pragma once

#include "lcmid/poly.hpp"
#include "oracles.hpp"

#include <random>

namespace testing_support {

/// Up to `max_terms` terms of degree <= max_degree with small rational coefficients.
inline lcmid::MultiPoly random_poly(std::mt19937_64& rng, const lcmid::SpacePtr& space, int max_terms = 5,
                                    int max_degree = 3) {
    std::uniform_int_distribution<int> count(0, max_terms), var(0, static_cast<int>(space->size()) - 1),
        deg(0, max_degree);
    std::vector<lcmid::Term> terms;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        lcmid::Monomial m;
        const int factors = deg(rng);
        for (int f = 0; f < factors; ++f) m = m * lcmid::Monomial::variable(static_cast<std::uint32_t>(var(rng)));
        terms.push_back({m, oracle::random_rational(rng, 9)});
    }
    return lcmid::MultiPoly::from_terms(space, std::move(terms));
}

}  // namespace testing_support
