#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpk/int_matrix.hpp"
#include "lpk/quiver.hpp"

namespace lpk::test {

inline std::string fixture(const std::string& name) { return std::string(LPK_FIXTURE_DIR) + "/" + name; }

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

inline Quiver make_quiver(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < v; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k) arrows.push_back({"a" + std::to_string(k), edges[k].first, edges[k].second});
    return Quiver(vertices, arrows);
}

/// Any quiver with 1..max_v vertices and 0..max_arrows arrows.
inline Quiver random_quiver(std::mt19937_64& rng, std::size_t max_v, std::size_t max_arrows) {
    const std::size_t v = uniform(rng, 1, max_v);
    const std::size_t a = uniform(rng, 0, max_arrows);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < a; ++k) edges.emplace_back(uniform(rng, 0, v - 1), uniform(rng, 0, v - 1));
    return make_quiver(v, edges);
}

/// Every vertex has an outgoing and an incoming arrow; at most max_arrows >= 2 max_v - 1 arrows.
inline Quiver random_sink_free_quiver(std::mt19937_64& rng, std::size_t max_v, std::size_t max_arrows) {
    const std::size_t v = uniform(rng, 1, max_v);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<bool> has_in(v, false);
    for (std::size_t i = 0; i < v; ++i) {
        const std::size_t t = uniform(rng, 0, v - 1);
        edges.emplace_back(i, t);
        has_in[t] = true;
    }
    for (std::size_t i = 0; i < v; ++i)
        if (!has_in[i]) edges.emplace_back(uniform(rng, 0, v - 1), i);
    const std::size_t total = uniform(rng, edges.size(), std::max(edges.size(), max_arrows));
    while (edges.size() < total) edges.emplace_back(uniform(rng, 0, v - 1), uniform(rng, 0, v - 1));
    std::shuffle(edges.begin(), edges.end(), rng);
    return make_quiver(v, edges);
}

/// Every vertex has an incoming arrow; sinks allowed.
inline Quiver random_no_source_quiver(std::mt19937_64& rng, std::size_t max_v, std::size_t max_arrows) {
    for (;;) {
        Quiver q = random_quiver(rng, max_v, max_arrows);
        if (check_no_sources(q).ok) return q;
    }
}

/// Toeplitz, Jacobson n <= 2 and roses with 1..4 petals.
inline std::vector<std::pair<std::string, Quiver>> standard_quivers() {
    return {{"toeplitz", quivers::toeplitz()}, {"jacobson0", quivers::jacobson(0)}, {"jacobson1", quivers::jacobson(1)},
            {"jacobson2", quivers::jacobson(2)}, {"rose1", quivers::rose(1)}, {"rose2", quivers::rose(2)},
            {"rose3", quivers::rose(3)}, {"rose4", quivers::rose(4)}};
}

}  // namespace lpk::test
