#include "lpk/rewriting.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace lpk {

RawExpression& RawExpression::operator+=(const RawExpression& other) {
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    return *this;
}

RawExpression RawExpression::operator*(const RawExpression& other) const {
    RawExpression out;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : other.terms) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            out.terms.emplace_back(std::move(w), c1 * c2);
        }
    return out;
}

RawExpression RawExpression::negated() const {
    RawExpression out = *this;
    for (auto& t : out.terms) t.second = -t.second;
    return out;
}

RawExpression RawExpression::star() const {
    RawExpression out;
    for (const auto& [w, c] : terms) {
        Word s(w.rbegin(), w.rend());
        for (auto& l : s) {
            if (l.kind == Letter::Kind::Arrow)
                l.kind = Letter::Kind::Ghost;
            else if (l.kind == Letter::Kind::Ghost)
                l.kind = Letter::Kind::Arrow;
        }
        out.terms.emplace_back(std::move(s), c);
    }
    return out;
}

namespace {

Element letter_element(const LeavittAlgebra& alg, const Letter& l) {
    switch (l.kind) {
        case Letter::Kind::Vertex: return alg.vertex(l.index);
        case Letter::Kind::Arrow: return alg.arrow(l.index);
        case Letter::Kind::Ghost: return alg.ghost(l.index);
    }
    throw std::logic_error("bad letter");
}

class WordRewriter {
public:
    explicit WordRewriter(const LeavittAlgebra& alg) : alg_(alg), q_(alg.quiver()) {}

    using Replacement = std::vector<std::pair<Word, Scalar>>;

    // Contracts the pair (x, y) if it is a redex; an empty replacement means zero.
    std::optional<Replacement> contract(const Letter& x, const Letter& y) const {
        using K = Letter::Kind;
        if (x.kind == K::Vertex && y.kind == K::Vertex) return keep_if(x.index == y.index, x);
        if (x.kind == K::Vertex) return keep_if(start(y) == x.index, y);
        if (y.kind == K::Vertex) return keep_if(end(x) == y.index, x);
        if (end(x) != start(y)) return Replacement{};
        if (x.kind == K::Ghost && y.kind == K::Arrow) {
            if (x.index != y.index) return Replacement{};
            return Replacement{{Word{Letter::vertex(q_.arrows()[x.index].target)}, Scalar(1)}};
        }
        if (x.kind == K::Arrow && y.kind == K::Ghost && x.index == y.index) {
            const std::size_t v = q_.arrows()[x.index].source;
            if (alg_.special_arrow(v) != x.index) return std::nullopt;
            Replacement r{{Word{Letter::vertex(v)}, Scalar(1)}};
            for (std::size_t a = 0; a < q_.num_arrows(); ++a)
                if (a != x.index && q_.arrows()[a].source == v)
                    r.emplace_back(Word{Letter::arrow(a), Letter::ghost(a)}, Scalar(-1));
            return r;
        }
        return std::nullopt;
    }

    Element to_element(const Word& w) const {
        using K = Letter::Kind;
        if (w.size() == 1 && w[0].kind == K::Vertex) return alg_.vertex(w[0].index);
        std::size_t split = 0;
        while (split < w.size() && w[split].kind == K::Arrow) ++split;
        Path sigma, tau;
        if (split > 0) {
            sigma.start = q_.arrows()[w[0].index].source;
            for (std::size_t i = 0; i < split; ++i) sigma.arrows.push_back(w[i].index);
            sigma.end = q_.arrows()[w[split - 1].index].target;
        }
        for (std::size_t i = w.size(); i-- > split;) {
            if (w[i].kind != K::Ghost) throw std::logic_error("rewriting: irreducible word is not of the form path ghost-path");
            tau.arrows.push_back(w[i].index);
        }
        if (!tau.empty()) {
            tau.start = q_.arrows()[tau.arrows.front()].source;
            tau.end = q_.arrows()[tau.arrows.back()].target;
        }
        if (sigma.empty()) sigma = Path::at(tau.end);
        if (tau.empty()) tau = Path::at(sigma.end);
        return alg_.monomial(sigma, tau);
    }

private:
    static std::optional<Replacement> keep_if(bool keep, const Letter& l) {
        if (!keep) return Replacement{};
        return Replacement{{Word{l}, Scalar(1)}};
    }

    std::size_t start(const Letter& l) const {
        const auto& a = q_.arrows()[l.index];
        return l.kind == Letter::Kind::Arrow ? a.source : a.target;
    }
    std::size_t end(const Letter& l) const {
        const auto& a = q_.arrows()[l.index];
        return l.kind == Letter::Kind::Arrow ? a.target : a.source;
    }

    const LeavittAlgebra& alg_;
    const Quiver& q_;
};

}  // namespace

Element evaluate(const LeavittAlgebra& alg, const RawExpression& expr) {
    Element out = alg.zero();
    for (const auto& [w, c] : expr.terms) {
        Element term = alg.scalar(c);
        for (const auto& l : w) term = term * letter_element(alg, l);
        out += term;
    }
    return out;
}

Element rewrite_normal_form(const LeavittAlgebra& alg, const RawExpression& expr, RewriteStrategy strategy,
                            std::size_t max_steps) {
    const WordRewriter rw(alg);
    const ScalarField& field = alg.field();
    std::map<Word, Scalar> pending;
    std::map<Word, Scalar> irreducible;

    auto accumulate = [&](std::map<Word, Scalar>& into, const Word& w, const Scalar& c) {
        auto [it, inserted] = into.try_emplace(w, c);
        if (!inserted) it->second += c;
        field.normalize(it->second);
        if (it->second == 0) into.erase(it);
    };

    for (const auto& [w, c] : expr.terms) {
        if (w.empty()) {
            for (std::size_t v = 0; v < alg.quiver().num_vertices(); ++v)
                accumulate(pending, Word{Letter::vertex(v)}, c);
        } else {
            accumulate(pending, w, c);
        }
    }

    std::size_t steps = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const Scalar& c = node.mapped();

        std::optional<std::size_t> at;
        std::optional<WordRewriter::Replacement> repl;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const std::size_t i = strategy == RewriteStrategy::Leftmost ? k : w.size() - 2 - k;
            if (auto r = rw.contract(w[i], w[i + 1])) {
                at = i;
                repl = std::move(r);
                break;
            }
        }
        if (!at) {
            accumulate(irreducible, w, c);
            continue;
        }
        if (++steps > max_steps) throw std::runtime_error("rewriting did not terminate within the step limit");
        for (const auto& [segment, k] : *repl) {
            Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*at));
            next.insert(next.end(), segment.begin(), segment.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*at) + 2, w.end());
            accumulate(pending, next, c * k);
        }
    }

    Element out = alg.zero();
    for (const auto& [w, c] : irreducible) out += c * rw.to_element(w);
    return out;
}

RawExpression random_raw_expression(const LeavittAlgebra& alg, std::mt19937_64& rng, std::size_t max_word_len,
                                    std::size_t max_terms) {
    const Quiver& q = alg.quiver();
    std::vector<Letter> letters;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) letters.push_back(Letter::vertex(v));
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        letters.push_back(Letter::arrow(a));
        letters.push_back(Letter::ghost(a));
    }
    auto start_of = [&](const Letter& l) {
        if (l.kind == Letter::Kind::Vertex) return l.index;
        const auto& a = q.arrows()[l.index];
        return l.kind == Letter::Kind::Arrow ? a.source : a.target;
    };
    auto end_of = [&](const Letter& l) {
        if (l.kind == Letter::Kind::Vertex) return l.index;
        const auto& a = q.arrows()[l.index];
        return l.kind == Letter::Kind::Arrow ? a.target : a.source;
    };

    std::uniform_int_distribution<std::size_t> n_terms(1, std::max<std::size_t>(1, max_terms));
    std::uniform_int_distribution<std::size_t> n_letters(1, std::max<std::size_t>(1, max_word_len));
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::bernoulli_distribution walk(0.75);

    RawExpression out;
    const std::size_t terms = n_terms(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        const bool composable = walk(rng);
        Word w;
        const std::size_t len = n_letters(rng);
        for (std::size_t i = 0; i < len; ++i) {
            if (composable && !w.empty()) {
                std::vector<Letter> next;
                for (const auto& l : letters)
                    if (start_of(l) == end_of(w.back())) next.push_back(l);
                w.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
            } else {
                w.push_back(letters[pick(rng)]);
            }
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        out.terms.emplace_back(std::move(w), Scalar(c));
    }
    return out;
}

}  // namespace lpk
