#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpk/quiver.hpp"

namespace lpk {

using Scalar = mpq_class;

/// Coefficient field of the engine: the rationals, or F_p for a prime p.
class ScalarField {
public:
    static ScalarField rationals() { return ScalarField(0); }
    /// Throws std::invalid_argument when p is not prime.
    static ScalarField prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    /// Canonical representative; F_p values land in [0, p).
    void normalize(Scalar& s) const;
    std::string render(const Scalar& s) const;

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    explicit ScalarField(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// Path in the quiver, read left to right: a1 a2 is composable when r(a1) = s(a2).
/// The empty path at v stands for the vertex idempotent e_v.
struct Path {
    std::size_t start = 0;
    std::size_t end = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    bool empty() const { return arrows.empty(); }
    static Path at(std::size_t vertex) { return {vertex, vertex, {}}; }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// sigma * tau^* with r(sigma) = r(tau).
struct Monomial {
    Path sigma;
    Path tau;

    int degree() const { return static_cast<int>(sigma.length()) - static_cast<int>(tau.length()); }
    std::size_t total_length() const { return sigma.length() + tau.length(); }
    bool is_vertex() const { return sigma.empty() && tau.empty(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Display order: shorter monomials first, then higher degree, then arrow sequences.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class LeavittAlgebra;

namespace detail {
struct AlgebraContext;
}

/// Element of L_Q as a finite combination of normal-form monomials with nonzero
/// coefficients. Arithmetic requires both operands to come from the same algebra.
class Element {
public:
    using Terms = std::map<Monomial, Scalar, MonomialOrder>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of a normal-form monomial (zero when absent).
    Scalar coefficient(const Monomial& m) const;
    /// The single degree when every monomial has the same degree (zero counts as any).
    bool is_homogeneous(int degree) const;

    Element star() const;
    std::string to_string() const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& a);

    friend bool operator==(const Element& a, const Element& b);

private:
    friend class LeavittAlgebra;
    friend struct detail::AlgebraContext;
    explicit Element(std::shared_ptr<const detail::AlgebraContext> ctx) : ctx_(std::move(ctx)) {}
    void add_term(const Monomial& m, const Scalar& c);

    std::shared_ptr<const detail::AlgebraContext> ctx_;
    Terms terms_;
};

/// Thrown when elements of different algebras are combined.
class AlgebraMismatch : public std::invalid_argument {
public:
    AlgebraMismatch() : std::invalid_argument("elements belong to different Leavitt path algebras") {}
};

/// The Leavitt path algebra L_Q: the double-quiver path algebra modulo
///   a^* b = delta_{ab} e_{r(a)}                 (CK1)
///   sum_{s(a) = v} a a^* = e_v, v not a sink    (CK2)
/// Elements are kept in the basis of monomials sigma tau^* that do not end in
/// gamma gamma^*, where gamma is the special arrow of its source vertex (the arrow
/// with lexicographically smallest id among those leaving it). Each occurrence of
/// that pattern is rewritten with CK2 to e_v - sum_{a != gamma} a a^*.
class LeavittAlgebra {
public:
    explicit LeavittAlgebra(const Quiver& q, ScalarField field = ScalarField::rationals());

    const Quiver& quiver() const;
    const ScalarField& field() const;
    /// Special arrow used for CK2 rewriting at a non-sink vertex.
    std::optional<std::size_t> special_arrow(std::size_t vertex) const;

    Element zero() const;
    /// sum_v e_v
    Element one() const;
    Element scalar(const Scalar& c) const;
    Element vertex(std::size_t v) const;
    Element arrow(std::size_t a) const;
    Element ghost(std::size_t a) const;
    Element path(const Path& p) const;
    /// Normal form of sigma tau^* (sigma and tau must share their range).
    Element monomial(const Path& sigma, const Path& tau) const;

    /// Whether sigma tau^* is already in normal form.
    bool is_normal(const Monomial& m) const;

    /// All paths of the given length ending at `range`, ordered by arrow sequence.
    std::vector<Path> paths_ending_at(std::size_t range, std::size_t length) const;
    /// Random path of length <= `length` ending at `range`, extended backwards along
    /// incoming arrows (shorter only when a source is reached).
    Path random_path_ending_at(std::size_t range, std::size_t length, std::mt19937_64& rng) const;
    /// Random element with up to `max_terms` terms, path lengths <= `max_path_len` and
    /// small integer coefficients. With `degree_zero`, both paths of each term have equal length.
    Element random_element(std::mt19937_64& rng, std::size_t max_path_len, std::size_t max_terms,
                           bool degree_zero = false) const;

    /// Decomposition into homogeneous components, keyed by degree.
    std::map<int, Element> grading_components(const Element& a) const;

    /// Dimension of the span of the given elements.
    std::size_t span_dimension(const std::vector<Element>& elements) const;

    std::string render_monomial(const Monomial& m) const;

private:
    std::shared_ptr<const detail::AlgebraContext> ctx_;
};

/// Normal-form monomials sigma tau^* with len(sigma), len(tau) <= max_path_len, in
/// MonomialOrder. Throws std::length_error once more than `limit` would be produced.
std::vector<Monomial> enumerate_basis(const LeavittAlgebra& alg, std::size_t max_path_len,
                                      std::size_t limit = 1'000'000);

/// Corner-skew structure of L_Q: t+ = sum_i alpha_i with r(alpha_i) = i, t- = t+^*,
/// e = t+ t-. Each alpha_i is the lexicographically smallest arrow id with range i.
struct CornerData {
    Element t_plus;
    Element t_minus;
    Element e;
    std::vector<std::size_t> designated;  // alpha_i per vertex i
};

/// Throws QuiverHasSources. Checks t- t+ = 1 and e = t+ t- by multiplication.
CornerData corner_data(const LeavittAlgebra& alg);

/// phi(a) = t+ a t-. When `warning` is given it receives a message if a is not
/// homogeneous of degree 0; the product is computed either way.
Element corner_phi(const Element& a, const CornerData& c, std::string* warning = nullptr);

struct CornerAxiomReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks t- t+ = 1, e^2 = e, phi(1) = e and, on `samples` random degree-zero elements
/// a and b, a t- = t- phi(a), t+ a = phi(a) t+, phi(a) phi(b) = phi(ab), phi(a) = e phi(a) e.
CornerAxiomReport verify_corner_axioms(const LeavittAlgebra& alg, std::size_t samples, std::uint64_t seed = 1);

}  // namespace lpk
