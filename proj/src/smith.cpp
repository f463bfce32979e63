#include "lpk/smith.hpp"

#include <optional>
#include <utility>

namespace lpk {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Least nonzero |a(i,j)| over i, j >= t; row-major scan keeps the first hit on ties.
std::optional<Position> find_pivot(const IntMatrix& a, std::size_t t) {
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = Position{i, j};
                best_abs = std::move(v);
            }
        }
    return best;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    while (r < n && D(r, r) != 0) ++r;
    return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());

    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        a.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        a.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
    };

    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
        bool exhausted = false;
        for (;;) {
            auto pivot = find_pivot(a, t);
            if (!pivot) {
                exhausted = true;
                break;
            }
            a.swap_rows(t, pivot->row);
            u.swap_rows(t, pivot->row);
            a.swap_cols(t, pivot->col);
            v.swap_cols(t, pivot->col);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);  // truncating: |remainder| < |pivot|
                row_add(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                col_add(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Row and column t are clear; enforce divisibility of the remaining block.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            row_add(t, *offender, 1);
        }
        if (exhausted) break;
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

FinAbGroup cokernel_int(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    return FinAbGroup::from_cyclic_orders(snf.invariant_factors(), m.rows() - snf.rank());
}

std::size_t kernel_rank_int(const IntMatrix& m) {
    return m.cols() - smith_normal_form(m).rank();
}

namespace {

FinAbGroup reduce_mod(const std::vector<Integer>& factors, std::size_t full_copies, const Modulus& mod) {
    const Integer m(static_cast<unsigned long>(mod.value()));
    std::vector<Integer> orders(full_copies, m);
    for (const auto& d : factors) orders.push_back(gcd(d, m));
    return FinAbGroup::from_cyclic_orders(std::move(orders));
}

}  // namespace

FinAbGroup cokernel_mod(const IntMatrix& m, const Modulus& mod) {
    auto snf = smith_normal_form(m);
    return reduce_mod(snf.invariant_factors(), m.rows() - snf.rank(), mod);
}

FinAbGroup kernel_mod(const IntMatrix& m, const Modulus& mod) {
    auto snf = smith_normal_form(m);
    return reduce_mod(snf.invariant_factors(), m.cols() - snf.rank(), mod);
}

}  // namespace lpk
