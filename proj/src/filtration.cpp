#include "lpk/filtration.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace lpk {

Integer BlockProfile::dimension() const {
    Integer d = 0;
    for (const auto& b : blocks) d += b.size * b.size;
    return d;
}

std::vector<BlockLabel> block_labels(const OrderedQuiver& q, std::size_t n) {
    std::vector<BlockLabel> labels;
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t w = 0; w < q.num_sinks(); ++w) labels.push_back({m, w});
    for (std::size_t u = q.num_sinks(); u < q.num_vertices(); ++u) labels.push_back({n, u});
    return labels;
}

BlockProfile block_profile(const OrderedQuiver& q, std::size_t n) {
    require_no_sources(q.quiver());
    BlockProfile profile{n, {}};
    std::vector<IntMatrix> powers{IntMatrix::identity(q.num_vertices())};
    const IntMatrix incidence = incidence_matrix(q);
    for (std::size_t m = 1; m <= n; ++m) powers.push_back(powers.back() * incidence);
    for (const auto& label : block_labels(q, n)) {
        Integer size = 0;
        for (std::size_t i = 0; i < q.num_vertices(); ++i) size += powers[label.level](i, label.vertex);
        profile.blocks.push_back({label, size});
    }
    return profile;
}

namespace {

std::vector<Path> block_paths(const LeavittAlgebra& alg, const BlockLabel& b) {
    return alg.paths_ending_at(b.vertex, b.level);
}

// Smallest path by arrow-id sequence.
Path representative_path(const LeavittAlgebra& alg, const BlockLabel& b) {
    auto paths = block_paths(alg, b);
    if (paths.empty()) throw std::logic_error("filtration: empty block");
    const auto& arrows = alg.quiver().arrows();
    auto ids = [&](const Path& p) {
        std::vector<std::string> out;
        for (auto a : p.arrows) out.push_back(arrows[a].id);
        return out;
    };
    return *std::min_element(paths.begin(), paths.end(),
                             [&](const Path& a, const Path& b) { return ids(a) < ids(b); });
}

// Rank of x in each block of stage `level`, via the trace sum_rho rho^* x rho = c e_w.
std::vector<Integer> k0_class(const LeavittAlgebra& alg, const OrderedQuiver& q, std::size_t level, const Element& x) {
    std::vector<Integer> out;
    for (const auto& label : block_labels(q, level)) {
        Scalar trace = 0;
        const Element ew = alg.vertex(label.vertex);
        for (const auto& rho : block_paths(alg, label)) {
            const Element r = alg.path(rho);
            const Element compressed = r.star() * x * r;
            const Scalar c = compressed.coefficient(Monomial{Path::at(label.vertex), Path::at(label.vertex)});
            if (!(compressed == c * ew))
                throw std::logic_error("filtration: compression of an idempotent is not a multiple of e_w");
            trace += c;
        }
        if (trace.get_den() != 1) throw std::logic_error("filtration: non-integral K_0 class");
        out.push_back(trace.get_num());
    }
    return out;
}

template <typename Transform>
IntMatrix k0_matrix(const OrderedQuiver& q, std::size_t n, Transform&& transform) {
    require_no_sources(q.quiver());
    const LeavittAlgebra alg(q.quiver());
    const auto sources = block_labels(q, n);
    const std::size_t target_count = block_labels(q, n + 1).size();
    IntMatrix m(target_count, sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j) {
        const Path sigma = representative_path(alg, sources[j]);
        const Element u = alg.monomial(sigma, sigma);
        if (!(u * u == u)) throw std::logic_error("filtration: block representative is not idempotent");
        const auto cls = k0_class(alg, q, n + 1, transform(alg, u));
        for (std::size_t i = 0; i < target_count; ++i) m(i, j) = cls[i];
    }
    return m;
}

}  // namespace

std::size_t filtration_span_dim(const OrderedQuiver& q, std::size_t n, std::size_t limit) {
    require_no_sources(q.quiver());
    const LeavittAlgebra alg(q.quiver());
    std::vector<Element> generators;
    for (const auto& label : block_labels(q, n)) {
        const auto paths = block_paths(alg, label);
        if (generators.size() + paths.size() * paths.size() > limit)
            throw std::length_error("filtration_span_dim: more than " + std::to_string(limit) + " generators");
        for (const auto& s : paths)
            for (const auto& t : paths) generators.push_back(alg.monomial(s, t));
    }
    return alg.span_dimension(generators);
}

IntMatrix inclusion_k0_matrix(const OrderedQuiver& q, std::size_t n) {
    return k0_matrix(q, n, [](const LeavittAlgebra&, const Element& u) { return u; });
}

IntMatrix phi_k0_matrix(const OrderedQuiver& q, std::size_t n) {
    std::optional<CornerData> corner;
    return k0_matrix(q, n, [&](const LeavittAlgebra& alg, const Element& u) {
        if (!corner) corner = corner_data(alg);
        return corner_phi(u, *corner);
    });
}

IntMatrix expected_inclusion_matrix(const OrderedQuiver& q, std::size_t n) {
    return block_diagonal(IntMatrix::identity((n + 1) * q.num_sinks()), reduced_incidence(q).transpose());
}

IntMatrix expected_phi_matrix(const OrderedQuiver& q, std::size_t n) {
    const std::size_t cols = (n + 1) * q.num_sinks() + q.num_non_sinks();
    return vstack(IntMatrix::zero(q.num_sinks(), cols), IntMatrix::identity(cols));
}

StageDifference stage_difference(const IntMatrix& inclusion, const IntMatrix& phi, const OrderedQuiver& q, std::size_t n) {
    const IntMatrix d = phi - inclusion;
    const std::size_t k = (n + 1) * q.num_sinks();
    if (d.rows() < k || d.cols() < k) throw std::invalid_argument("stage_difference: shape mismatch");
    auto block = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        IntMatrix out(r1 - r0, c1 - c0);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = d(i, j);
        return out;
    };
    return {block(0, k, 0, k), block(0, k, k, d.cols()), block(k, d.rows(), 0, k), block(k, d.rows(), k, d.cols())};
}

}  // namespace lpk
