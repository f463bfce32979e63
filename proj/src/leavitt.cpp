#include "lpk/leavitt.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpk/modulus.hpp"

namespace lpk {

// ---------------------------------------------------------------------------
// Scalars

ScalarField ScalarField::prime(std::uint64_t p) {
    auto f = factorize(p < 2 ? 1 : p);
    if (p < 2 || f.size() != 1 || f[0].exponent != 1) throw std::invalid_argument("not a prime: " + std::to_string(p));
    return ScalarField(p);
}

void ScalarField::normalize(Scalar& s) const {
    s.canonicalize();
    if (p_ == 0) return;
    const mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num, den_inv;
    mpz_fdiv_r(num.get_mpz_t(), s.get_num_mpz_t(), p.get_mpz_t());
    if (mpz_invert(den_inv.get_mpz_t(), s.get_den_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("denominator divisible by the field characteristic");
    mpz_class r = num * den_inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    s = Scalar(r);
}

std::string ScalarField::render(const Scalar& s) const {
    if (p_ == 0) return s.get_str();
    mpz_class v = s.get_num();
    if (v > p_ / 2) v -= static_cast<unsigned long>(p_);
    return v.get_str();
}

// ---------------------------------------------------------------------------
// Monomials

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.sigma.arrows != b.sigma.arrows) return a.sigma.arrows < b.sigma.arrows;
    if (a.tau.arrows != b.tau.arrows) return a.tau.arrows < b.tau.arrows;
    if (a.sigma.start != b.sigma.start) return a.sigma.start < b.sigma.start;
    if (a.tau.start != b.tau.start) return a.tau.start < b.tau.start;
    return a.sigma.end < b.sigma.end;
}

namespace detail {

struct AlgebraContext {
    Quiver quiver;
    ScalarField field;
    std::vector<std::optional<std::size_t>> special;    // per vertex
    std::vector<std::vector<std::size_t>> outgoing;     // arrows by source, declaration order
    std::vector<std::vector<std::size_t>> incoming;     // arrows by target, declaration order

    AlgebraContext(const Quiver& q, ScalarField f) : quiver(q), field(f) {
        const std::size_t n = q.num_vertices();
        special.resize(n);
        outgoing.resize(n);
        incoming.resize(n);
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            const auto& arr = q.arrows()[a];
            outgoing[arr.source].push_back(a);
            incoming[arr.target].push_back(a);
            auto& sp = special[arr.source];
            if (!sp || arr.id < q.arrows()[*sp].id) sp = a;
        }
    }

    std::size_t source_of(std::size_t a) const { return quiver.arrows()[a].source; }
    std::size_t range_of(std::size_t a) const { return quiver.arrows()[a].target; }

    bool is_normal(const Monomial& m) const {
        if (m.sigma.empty() || m.tau.empty()) return true;
        const std::size_t a = m.sigma.arrows.back();
        return !(a == m.tau.arrows.back() && special[source_of(a)] == a);
    }

    // Adds c * sigma tau^* to `out`, rewriting a special junction with CK2 until normal.
    void add_normalized(Element& out, Path sigma, Path tau, const Scalar& c) const {
        while (!sigma.empty() && !tau.empty() && sigma.arrows.back() == tau.arrows.back() &&
               special[source_of(sigma.arrows.back())] == sigma.arrows.back()) {
            const std::size_t gamma = sigma.arrows.back();
            const std::size_t v = source_of(gamma);
            sigma.arrows.pop_back();
            tau.arrows.pop_back();
            sigma.end = tau.end = v;
            for (std::size_t a : outgoing[v]) {
                if (a == gamma) continue;
                Monomial m{sigma, tau};
                m.sigma.arrows.push_back(a);
                m.tau.arrows.push_back(a);
                m.sigma.end = m.tau.end = range_of(a);
                out.add_term(m, -c);
            }
        }
        out.add_term(Monomial{std::move(sigma), std::move(tau)}, c);
    }

    std::string render(const Monomial& m) const {
        if (m.is_vertex()) return "e(" + quiver.vertices()[m.sigma.start] + ")";
        std::string out;
        for (std::size_t a : m.sigma.arrows) {
            if (!out.empty()) out += ' ';
            out += quiver.arrows()[a].id;
        }
        for (auto it = m.tau.arrows.rbegin(); it != m.tau.arrows.rend(); ++it) {
            if (!out.empty()) out += ' ';
            out += quiver.arrows()[*it].id + '*';
        }
        return out;
    }

    static Path concat(const Path& p, const std::vector<std::size_t>& tail, std::size_t tail_end) {
        Path r = p;
        r.arrows.insert(r.arrows.end(), tail.begin(), tail.end());
        if (!tail.empty()) r.end = tail_end;
        return r;
    }

    // (s1 t1^*)(s2 t2^*) accumulated into out with coefficient c.
    void multiply_monomials(Element& out, const Monomial& x, const Monomial& y, const Scalar& c) const {
        const Path& t1 = x.tau;
        const Path& s2 = y.sigma;
        if (t1.start != s2.start) return;
        const std::size_t common = std::min(t1.length(), s2.length());
        if (!std::equal(t1.arrows.begin(), t1.arrows.begin() + static_cast<std::ptrdiff_t>(common), s2.arrows.begin()))
            return;
        if (t1.length() <= s2.length()) {
            // t1^* s2 = remainder of s2 after t1
            std::vector<std::size_t> rest(s2.arrows.begin() + static_cast<std::ptrdiff_t>(common), s2.arrows.end());
            add_normalized(out, concat(x.sigma, rest, s2.end), y.tau, c);
        } else {
            // t1^* s2 = (remainder of t1 after s2)^*
            std::vector<std::size_t> rest(t1.arrows.begin() + static_cast<std::ptrdiff_t>(common), t1.arrows.end());
            add_normalized(out, x.sigma, concat(y.tau, rest, t1.end), c);
        }
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Element

Scalar Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool Element::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) { return t.first.degree() == degree; });
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    ctx_->field.normalize(it->second);
    if (it->second == 0) terms_.erase(it);
}

Element Element::star() const {
    Element r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.tau, m.sigma}, c);
    return r;
}

Element& Element::operator+=(const Element& other) {
    if (ctx_ != other.ctx_) throw AlgebraMismatch();
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    if (ctx_ != other.ctx_) throw AlgebraMismatch();
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Element operator-(const Element& a) {
    Element r(a.ctx_);
    for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
    return r;
}

Element operator*(const Element& a, const Element& b) {
    if (a.ctx_ != b.ctx_) throw AlgebraMismatch();
    Element r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) a.ctx_->multiply_monomials(r, ma, mb, ca * cb);
    return r;
}

Element operator*(const Scalar& c, const Element& a) {
    Element r(a.ctx_);
    for (const auto& [m, x] : a.terms_) r.add_term(m, c * x);
    return r;
}

bool operator==(const Element& a, const Element& b) {
    if (a.ctx_ != b.ctx_) throw AlgebraMismatch();
    return a.terms_ == b.terms_;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    const auto& field = ctx_->field;
    const std::size_t nv = ctx_->quiver.num_vertices();

    // A common coefficient on every vertex idempotent is printed as a scalar multiple of 1.
    std::vector<std::pair<std::string, Scalar>> parts;
    std::size_t vertex_terms = 0;
    std::optional<Scalar> common;
    bool uniform = true;
    for (const auto& [m, c] : terms_) {
        if (!m.is_vertex()) continue;
        ++vertex_terms;
        if (!common) common = c;
        else if (*common != c) uniform = false;
    }
    const bool collapse = vertex_terms == nv && uniform;
    if (collapse) parts.emplace_back("", *common);

    for (const auto& [m, c] : terms_) {
        if (collapse && m.is_vertex()) continue;
        parts.emplace_back(ctx_->render(m), c);
    }

    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [word, c] = parts[i];
        std::string coeff = field.render(c);
        bool negative = coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (i == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (word.empty())
            out += coeff;
        else if (coeff == "1")
            out += word;
        else
            out += coeff + ' ' + word;
    }
    return out;
}

// ---------------------------------------------------------------------------
// LeavittAlgebra

LeavittAlgebra::LeavittAlgebra(const Quiver& q, ScalarField field)
    : ctx_(std::make_shared<const detail::AlgebraContext>(q, field)) {}

const Quiver& LeavittAlgebra::quiver() const { return ctx_->quiver; }
const ScalarField& LeavittAlgebra::field() const { return ctx_->field; }
std::optional<std::size_t> LeavittAlgebra::special_arrow(std::size_t vertex) const { return ctx_->special.at(vertex); }

Element LeavittAlgebra::zero() const { return Element(ctx_); }

Element LeavittAlgebra::one() const {
    Element r(ctx_);
    for (std::size_t v = 0; v < ctx_->quiver.num_vertices(); ++v) r.add_term({Path::at(v), Path::at(v)}, 1);
    return r;
}

Element LeavittAlgebra::scalar(const Scalar& c) const { return c * one(); }

Element LeavittAlgebra::vertex(std::size_t v) const {
    if (v >= ctx_->quiver.num_vertices()) throw std::out_of_range("vertex index");
    Element r(ctx_);
    r.add_term({Path::at(v), Path::at(v)}, 1);
    return r;
}

Element LeavittAlgebra::arrow(std::size_t a) const {
    if (a >= ctx_->quiver.num_arrows()) throw std::out_of_range("arrow index");
    const std::size_t t = ctx_->range_of(a);
    Element r(ctx_);
    r.add_term({Path{ctx_->source_of(a), t, {a}}, Path::at(t)}, 1);
    return r;
}

Element LeavittAlgebra::ghost(std::size_t a) const { return arrow(a).star(); }

Element LeavittAlgebra::path(const Path& p) const { return monomial(p, Path::at(p.end)); }

Element LeavittAlgebra::monomial(const Path& sigma, const Path& tau) const {
    if (sigma.end != tau.end) throw std::invalid_argument("monomial: paths have different ranges");
    Element r(ctx_);
    ctx_->add_normalized(r, sigma, tau, 1);
    return r;
}

bool LeavittAlgebra::is_normal(const Monomial& m) const { return ctx_->is_normal(m); }

std::vector<Path> LeavittAlgebra::paths_ending_at(std::size_t range, std::size_t length) const {
    // Built backwards: extend each path on the left by an incoming arrow.
    std::vector<Path> current{Path::at(range)};
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<Path> next;
        for (const auto& p : current)
            for (std::size_t a : ctx_->incoming[p.start]) {
                Path q{ctx_->source_of(a), p.end, {a}};
                q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
                next.push_back(std::move(q));
            }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end(), [](const Path& a, const Path& b) { return a.arrows < b.arrows; });
    return current;
}

Path LeavittAlgebra::random_path_ending_at(std::size_t range, std::size_t length, std::mt19937_64& rng) const {
    Path p = Path::at(range);
    for (std::size_t step = 0; step < length; ++step) {
        const auto& in = ctx_->incoming[p.start];
        if (in.empty()) break;
        std::size_t a = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
        p.arrows.insert(p.arrows.begin(), a);
        p.start = ctx_->source_of(a);
    }
    return p;
}

Element LeavittAlgebra::random_element(std::mt19937_64& rng, std::size_t max_path_len, std::size_t max_terms,
                                       bool degree_zero) const {
    std::uniform_int_distribution<std::size_t> terms_dist(1, std::max<std::size_t>(1, max_terms));
    std::uniform_int_distribution<std::size_t> vertex_dist(0, ctx_->quiver.num_vertices() - 1);
    std::uniform_int_distribution<std::size_t> len_dist(0, max_path_len);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    Element r(ctx_);
    const std::size_t n = terms_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t w = vertex_dist(rng);
        const std::size_t ls = len_dist(rng);
        const std::size_t lt = degree_zero ? ls : len_dist(rng);
        Path sigma = random_path_ending_at(w, ls, rng);
        Path tau = random_path_ending_at(w, lt, rng);
        if (degree_zero && sigma.length() != tau.length()) {
            const std::size_t l = std::min(sigma.length(), tau.length());
            sigma = random_path_ending_at(w, l, rng);
            tau = random_path_ending_at(w, l, rng);
            if (sigma.length() != tau.length()) continue;
        }
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        ctx_->add_normalized(r, std::move(sigma), std::move(tau), c);
    }
    return r;
}

std::map<int, Element> LeavittAlgebra::grading_components(const Element& a) const {
    if (a.ctx_ != ctx_) throw AlgebraMismatch();
    std::map<int, Element> out;
    for (const auto& [m, c] : a.terms()) out.try_emplace(m.degree(), Element(ctx_)).first->second.add_term(m, c);
    return out;
}

std::size_t LeavittAlgebra::span_dimension(const std::vector<Element>& elements) const {
    // Incremental echelon form keyed by leading monomial; pivot rows are monic.
    std::map<Monomial, Element::Terms, MonomialOrder> pivots;
    for (const auto& e : elements) {
        if (e.ctx_ != ctx_) throw AlgebraMismatch();
        Element::Terms v = e.terms();
        while (!v.empty()) {
            const Monomial lead = v.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Scalar inv = 1 / v.begin()->second;
                ctx_->field.normalize(inv);
                for (auto& [m, c] : v) {
                    c *= inv;
                    ctx_->field.normalize(c);
                }
                pivots.emplace(lead, std::move(v));
                break;
            }
            const Scalar factor = v.begin()->second;
            for (const auto& [m, c] : it->second) {
                auto [slot, inserted] = v.try_emplace(m, 0);
                slot->second -= factor * c;
                ctx_->field.normalize(slot->second);
                if (slot->second == 0) v.erase(slot);
            }
        }
    }
    return pivots.size();
}

std::string LeavittAlgebra::render_monomial(const Monomial& m) const { return ctx_->render(m); }

std::vector<Monomial> enumerate_basis(const LeavittAlgebra& alg, std::size_t max_path_len, std::size_t limit) {
    std::vector<Monomial> out;
    const std::size_t nv = alg.quiver().num_vertices();
    for (std::size_t w = 0; w < nv; ++w) {
        std::vector<Path> ending;
        for (std::size_t len = 0; len <= max_path_len; ++len) {
            auto ps = alg.paths_ending_at(w, len);
            if (ps.size() > limit) throw std::length_error("enumerate_basis: basis exceeds the configured bound");
            ending.insert(ending.end(), ps.begin(), ps.end());
        }
        for (const auto& s : ending)
            for (const auto& t : ending) {
                Monomial m{s, t};
                if (!alg.is_normal(m)) continue;
                if (out.size() >= limit) throw std::length_error("enumerate_basis: basis exceeds the configured bound");
                out.push_back(std::move(m));
            }
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

// ---------------------------------------------------------------------------
// Corner structure

CornerData corner_data(const LeavittAlgebra& alg) {
    const Quiver& q = alg.quiver();
    require_no_sources(q);
    CornerData c{alg.zero(), alg.zero(), alg.zero(), {}};
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
        std::optional<std::size_t> best;
        for (std::size_t a = 0; a < q.num_arrows(); ++a)
            if (q.arrows()[a].target == i && (!best || q.arrows()[a].id < q.arrows()[*best].id)) best = a;
        c.designated.push_back(*best);
        c.t_plus += alg.arrow(*best);
    }
    c.t_minus = c.t_plus.star();
    c.e = c.t_plus * c.t_minus;
    if (!(c.t_minus * c.t_plus == alg.one())) throw std::logic_error("corner_data: t- t+ != 1");
    return c;
}

Element corner_phi(const Element& a, const CornerData& c, std::string* warning) {
    if (warning) {
        warning->clear();
        if (!a.is_homogeneous(0)) *warning = "corner_phi: argument is not homogeneous of degree 0";
    }
    return c.t_plus * a * c.t_minus;
}

CornerAxiomReport verify_corner_axioms(const LeavittAlgebra& alg, std::size_t samples, std::uint64_t seed) {
    CornerAxiomReport report;
    const CornerData c = corner_data(alg);
    const Element one = alg.one();
    auto check = [&](bool ok, const std::string& what) {
        ++report.checks;
        if (!ok) report.failures.push_back(what);
    };
    check(c.t_minus * c.t_plus == one, "t- t+ = 1");
    check(c.e * c.e == c.e, "e^2 = e");
    check(corner_phi(one, c) == c.e, "phi(1) = e");

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Element a = alg.random_element(rng, 2, 3, true);
        const Element b = alg.random_element(rng, 2, 3, true);
        const Element pa = corner_phi(a, c);
        const std::string tag = " for a = " + a.to_string();
        check(a * c.t_minus == c.t_minus * pa, "a t- = t- phi(a)" + tag);
        check(c.t_plus * a == pa * c.t_plus, "t+ a = phi(a) t+" + tag);
        check(pa * corner_phi(b, c) == corner_phi(a * b, c), "phi(a) phi(b) = phi(ab)" + tag);
        check(c.e * pa * c.e == pa, "phi(a) in e A e" + tag);
        check(pa.is_homogeneous(0), "phi(a) has degree 0" + tag);
    }
    return report;
}

}  // namespace lpk
