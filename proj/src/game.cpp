#include "wythoff/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace wythoff {

game_spec wythoff_spec(coord a) {
    if (a < 1) throw std::invalid_argument("wythoff_spec: a must be >= 1");
    return game_spec{2, {{1, 0}, {0, 1}, {a, a}}};
}

game_spec wythoff3_spec() {
    return game_spec{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
}

void validate_spec(const game_spec& g) {
    if (g.dimension == 0) throw std::invalid_argument("game_spec: zero dimension");
    if (g.basis.empty()) throw std::invalid_argument("game_spec: empty basis");
    for (const pos_vec& v : g.basis) {
        if (v.size() != g.dimension) throw std::invalid_argument("game_spec: vector arity mismatch");
        bool positive = false;
        for (coord c : v) {
            if (c < 0) throw std::invalid_argument("game_spec: negative vector entry");
            positive |= c > 0;
        }
        if (!positive) throw std::invalid_argument("game_spec: zero vector");
    }
    std::vector<pos_vec> sorted = g.basis;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("game_spec: duplicate basis vector");
}

std::optional<pos_vec> apply_move(const pos_vec& p, const game_spec& g, const game_move& m) {
    if (p.size() != g.dimension) throw std::invalid_argument("apply_move: position arity mismatch");
    if (m.vector_index >= g.basis.size()) throw std::invalid_argument("apply_move: bad vector index");
    if (m.multiple < 1) throw std::invalid_argument("apply_move: multiple must be >= 1");
    const pos_vec& v = g.basis[m.vector_index];
    pos_vec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] = p[i] - m.multiple * v[i];
        if (q[i] < 0) return std::nullopt;
    }
    return q;
}

std::vector<pos_vec> predecessors_reached(const pos_vec& p, const game_spec& g,
                                          const pos_vec& max_corner) {
    if (p.size() != g.dimension || max_corner.size() != g.dimension)
        throw std::invalid_argument("predecessors_reached: arity mismatch");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 0 || p[i] > max_corner[i])
            throw std::invalid_argument("predecessors_reached: position outside bound");

    std::vector<pos_vec> out;
    for (const pos_vec& v : g.basis) {
        pos_vec q = p;
        for (coord k = 1;; ++k) {
            bool inside = true;
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] += v[i];
                if (q[i] > max_corner[i]) inside = false;
            }
            if (!inside) break;
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace wythoff
