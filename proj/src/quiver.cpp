#include "lpk/quiver.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lpk {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& it : items) {
        if (!s.empty()) s += ' ';
        s += it;
    }
    return s;
}

}  // namespace

QuiverHasSources::QuiverHasSources(std::vector<std::string> offenders)
    : std::domain_error("quiver has sources: " + join(offenders)), offenders_(std::move(offenders)) {}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    if (vertices_.empty()) throw std::invalid_argument("quiver has no vertices");
    std::set<std::string_view> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex id '" + v + "'");
    seen.clear();
    for (const auto& a : arrows_) {
        if (!seen.insert(a.id).second) throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw std::invalid_argument("arrow '" + a.id + "' has an undeclared endpoint");
    }
}

std::optional<std::size_t> Quiver::vertex_index(std::string_view id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view id) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id == id) return i;
    return std::nullopt;
}

std::size_t Quiver::out_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; }));
}

std::size_t Quiver::in_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; }));
}

std::size_t Quiver::num_sinks() const {
    std::size_t n = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) n += is_sink(v);
    return n;
}

Quiver Quiver::reordered(const std::vector<std::size_t>& new_to_old) const {
    if (new_to_old.size() != vertices_.size()) throw std::invalid_argument("reordered: not a permutation");
    std::vector<std::size_t> old_to_new(vertices_.size(), vertices_.size());
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < new_to_old.size(); ++i) {
        if (new_to_old[i] >= vertices_.size() || old_to_new[new_to_old[i]] != vertices_.size())
            throw std::invalid_argument("reordered: not a permutation");
        old_to_new[new_to_old[i]] = i;
        vs.push_back(vertices_[new_to_old[i]]);
    }
    std::vector<Arrow> as = arrows_;
    for (auto& a : as) {
        a.source = old_to_new[a.source];
        a.target = old_to_new[a.target];
    }
    return Quiver(std::move(vs), std::move(as));
}

Quiver parse_quiver(std::string_view text) {
    std::vector<std::string> vertices;
    std::unordered_map<std::string, std::size_t> vertex_ids;
    std::vector<Arrow> arrows;
    std::set<std::string> arrow_ids;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "vertices") {
            if (tok.size() < 2) throw ParseError(lineno, 0, "'vertices' needs at least one id");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!vertex_ids.emplace(tok[i], vertices.size()).second)
                    throw ParseError(lineno, 0, "duplicate vertex id '" + tok[i] + "'");
                vertices.push_back(tok[i]);
            }
        } else if (tok[0] == "arrow") {
            if (tok.size() != 4) throw ParseError(lineno, 0, "syntax error: expected 'arrow <id> <source> <target>'");
            if (!arrow_ids.insert(tok[1]).second) throw ParseError(lineno, 0, "duplicate arrow id '" + tok[1] + "'");
            auto s = vertex_ids.find(tok[2]);
            auto t = vertex_ids.find(tok[3]);
            if (s == vertex_ids.end()) throw ParseError(lineno, 0, "undeclared endpoint '" + tok[2] + "'");
            if (t == vertex_ids.end()) throw ParseError(lineno, 0, "undeclared endpoint '" + tok[3] + "'");
            arrows.push_back({tok[1], s->second, t->second});
        } else {
            throw ParseError(lineno, 0, "syntax error: unknown directive '" + tok[0] + "'");
        }
    }
    if (vertices.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 0, "empty vertex set");
    return Quiver(std::move(vertices), std::move(arrows));
}

std::string render_quiver(const Quiver& q) {
    std::string out = "vertices";
    for (const auto& v : q.vertices()) out += ' ' + v;
    out += '\n';
    for (const auto& a : q.arrows())
        out += "arrow " + a.id + ' ' + q.vertices()[a.source] + ' ' + q.vertices()[a.target] + '\n';
    return out;
}

SourceCheck check_no_sources(const Quiver& q) {
    SourceCheck r{true, {}};
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (q.in_degree(v) == 0) {
            r.ok = false;
            r.offenders.push_back(q.vertices()[v]);
        }
    return r;
}

void require_no_sources(const Quiver& q) {
    auto check = check_no_sources(q);
    if (!check.ok) throw QuiverHasSources(std::move(check.offenders));
}

namespace {

Quiver stable_sinks_first(const Quiver& q) {
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (q.is_sink(v)) order.push_back(v);
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (!q.is_sink(v)) order.push_back(v);
    return q.reordered(order);
}

}  // namespace

OrderedQuiver::OrderedQuiver(const Quiver& q) : quiver_(stable_sinks_first(q)), sinks_(q.num_sinks()) {}

OrderedQuiver order_sinks_first(const Quiver& q) { return OrderedQuiver(q); }

IntMatrix incidence_matrix(const OrderedQuiver& q) {
    const auto& quiver = q.quiver();
    IntMatrix m(quiver.num_vertices(), quiver.num_vertices());
    for (const auto& a : quiver.arrows()) m(a.source, a.target) += 1;
    return m;
}

IntMatrix reduced_incidence(const OrderedQuiver& q) {
    IntMatrix full = incidence_matrix(q);
    for (std::size_t i = 0; i < q.num_sinks(); ++i)
        if (!full.row_is_zero(i)) throw std::logic_error("reduced_incidence: sink row " + std::to_string(i) + " is nonzero");
    return full.row_block(q.num_sinks(), q.num_non_sinks());
}

IntMatrix path_count_matrix(const OrderedQuiver& q, unsigned length) {
    return matrix_power(incidence_matrix(q), length);
}

namespace quivers {

Quiver rose(std::size_t petals) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < petals; ++k) {
        std::string id;
        if (petals <= 3) {
            id = std::string(1, "xyz"[k]);
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "x%03zu", k);
            id = buf;
        }
        arrows.push_back({id, 0, 0});
    }
    return Quiver({"w"}, std::move(arrows));
}

Quiver jacobson(std::size_t n) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k <= n; ++k) arrows.push_back({"a" + std::to_string(k), 0, 0});
    for (std::size_t k = 0; k <= n; ++k) arrows.push_back({"b" + std::to_string(k), 0, 1});
    return Quiver({"1", "2"}, std::move(arrows));
}

Quiver toeplitz() { return Quiver({"1", "2"}, {{"a", 0, 0}, {"b", 0, 1}}); }

}  // namespace quivers

}  // namespace lpk
