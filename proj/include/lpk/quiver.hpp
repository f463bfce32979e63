#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpk/int_matrix.hpp"

namespace lpk {

/// Syntax or validation error in textual input, tagged with a 1-based line number
/// (and column, when meaningful).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Raised by operations that require a quiver without sources.
class QuiverHasSources : public std::domain_error {
public:
    explicit QuiverHasSources(std::vector<std::string> offenders);
    const std::vector<std::string>& offenders() const { return offenders_; }

private:
    std::vector<std::string> offenders_;
};

struct Arrow {
    std::string id;
    std::size_t source;  // vertex index
    std::size_t target;  // vertex index

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph. Vertices and arrows keep their declaration order;
/// arrow endpoints are indices into the vertex list.
class Quiver {
public:
    Quiver() = default;
    /// Validates ids and endpoints; throws std::invalid_argument.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }

    std::optional<std::size_t> vertex_index(std::string_view id) const;
    std::optional<std::size_t> arrow_index(std::string_view id) const;

    std::size_t out_degree(std::size_t v) const;
    std::size_t in_degree(std::size_t v) const;
    bool is_sink(std::size_t v) const { return out_degree(v) == 0; }
    std::size_t num_sinks() const;

    /// Vertices in the given order (a permutation of the current vertex ids);
    /// arrows keep their order.
    Quiver reordered(const std::vector<std::size_t>& new_to_old) const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Line-oriented quiver text: `#` comments, `vertices <id>...` and `arrow <id> <src> <dst>`.
/// Endpoints must be declared on an earlier `vertices` line.
Quiver parse_quiver(std::string_view text);
/// Canonical rendering accepted by parse_quiver.
std::string render_quiver(const Quiver& q);

struct SourceCheck {
    bool ok;
    std::vector<std::string> offenders;  // vertices without incoming arrows
};
SourceCheck check_no_sources(const Quiver& q);
/// Throws QuiverHasSources when check_no_sources fails.
void require_no_sources(const Quiver& q);

/// A quiver whose vertex list is stably partitioned with the sinks first.
class OrderedQuiver {
public:
    explicit OrderedQuiver(const Quiver& q);

    const Quiver& quiver() const { return quiver_; }
    /// v
    std::size_t num_vertices() const { return quiver_.num_vertices(); }
    /// v'
    std::size_t num_sinks() const { return sinks_; }
    std::size_t num_non_sinks() const { return num_vertices() - sinks_; }

    friend bool operator==(const OrderedQuiver&, const OrderedQuiver&) = default;

private:
    Quiver quiver_;
    std::size_t sinks_;
};

OrderedQuiver order_sinks_first(const Quiver& q);

/// v x v matrix, entry (i, j) = number of arrows from vertex i to vertex j.
IntMatrix incidence_matrix(const OrderedQuiver& q);
/// Incidence matrix with the leading v' sink rows removed: (v - v') x v.
IntMatrix reduced_incidence(const OrderedQuiver& q);
/// Entry (i, j) = number of paths of length `length` from vertex i to vertex j.
IntMatrix path_count_matrix(const OrderedQuiver& q, unsigned length);

// Standard families used throughout tests and fixtures.
namespace quivers {
/// One vertex "w" with `petals` loops named x, y, z, ... (then p<k>).
Quiver rose(std::size_t petals);
/// Vertices {1, 2}; n+1 loops a<k> at 1 and n+1 arrows b<k> from 1 to 2.
Quiver jacobson(std::size_t n);
/// J_0: loop a at 1 and arrow b from 1 to 2.
Quiver toeplitz();
}  // namespace quivers

}  // namespace lpk
