#pragma once

#include <compare>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "lpk/leavitt.hpp"

namespace lpk {

/// Generator of the double-quiver path algebra.
struct Letter {
    enum class Kind { Vertex, Arrow, Ghost };
    Kind kind;
    std::size_t index;  // vertex index for Vertex, arrow index otherwise

    static Letter vertex(std::size_t v) { return {Kind::Vertex, v}; }
    static Letter arrow(std::size_t a) { return {Kind::Arrow, a}; }
    static Letter ghost(std::size_t a) { return {Kind::Ghost, a}; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Product of generators; the empty word is the unit.
using Word = std::vector<Letter>;

/// Unreduced linear combination of words.
struct RawExpression {
    std::vector<std::pair<Word, Scalar>> terms;

    static RawExpression scalar(const Scalar& c) { return {{{Word{}, c}}}; }
    static RawExpression letter(Letter l) { return {{{Word{l}, Scalar(1)}}}; }

    RawExpression& operator+=(const RawExpression& other);
    RawExpression operator*(const RawExpression& other) const;  // distributive expansion
    RawExpression negated() const;
    /// Involution: reverse each word, swap arrows and ghosts.
    RawExpression star() const;
};

/// Evaluates by multiplying generators in the algebra (monomial product algorithm).
Element evaluate(const LeavittAlgebra& alg, const RawExpression& expr);

/// Which redex a rewriting step contracts.
enum class RewriteStrategy { Leftmost, Rightmost };

/// Reduces with the rewriting system on words, independent of the monomial product:
///   e_u e_v -> delta e_u,   e_u x -> delta x,   x e_u -> delta x
///   x y -> 0 when not composable
///   a^* b -> delta_{ab} e_{r(a)}                           (CK1)
///   g g^* -> e_{s(g)} - sum_{s(a) = s(g), a != g} a a^*     (CK2, g special)
/// Throws std::runtime_error if `max_steps` rewrites do not reach a normal form.
Element rewrite_normal_form(const LeavittAlgebra& alg, const RawExpression& expr, RewriteStrategy strategy,
                            std::size_t max_steps = 1'000'000);

/// Random combination of up to `max_terms` random words of length <= `max_word_len`
/// over all generators, including uncomposable ones.
RawExpression random_raw_expression(const LeavittAlgebra& alg, std::mt19937_64& rng, std::size_t max_word_len,
                                    std::size_t max_terms);

}  // namespace lpk
