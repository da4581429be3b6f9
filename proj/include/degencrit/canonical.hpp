#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "io.hpp"

namespace degencrit {

// Hard cap for canonical-form computations; everything above is refused.
inline constexpr int canonical_cap = 12;

// Relabel g so that new position p takes the old vertex order[p].
inline Graph apply_labeling(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("apply_labeling: order has wrong length");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        int v = order[static_cast<std::size_t>(p)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("apply_labeling: not a permutation");
        pos[static_cast<std::size_t>(v)] = p;
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p)
        for (std::uint64_t m = g.neighbour_mask(order[static_cast<std::size_t>(p)]); m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            adj[static_cast<std::size_t>(p)] |= Graph::bit(pos[static_cast<std::size_t>(u)]);
        }
    return Graph::from_adjacency_masks(std::move(adj));
}

namespace detail {

struct CanonicalRun {
    std::string form;        // graph6 of the canonically relabelled graph
    std::vector<int> order;  // order[p] = original vertex at canonical position p
    int marked_pos;          // canonical position of the marked vertex, -1 if unmarked
};

// Canonical labelling by minimizing the graph6 bit-string over all vertex orders
// consistent with an invariant ordered partition (colour refinement at the root,
// splitting by each placed vertex during the search). Tied branches are cut with
// automorphisms discovered when two labellings produce the same string.
class CanonicalSearch {
public:
    CanonicalSearch(const Graph& g, int mark) : g_(g), n_(g.vertex_count()), mark_(mark) {
        if (n_ > canonical_cap)
            throw std::invalid_argument("canonical form: " + std::to_string(n_) +
                                        " vertices exceeds cap of " +
                                        std::to_string(canonical_cap));
        if (mark_ >= n_ || mark_ < -1)
            throw std::invalid_argument("canonical form: mark out of range");
    }

    CanonicalRun run() {
        placed_.reserve(static_cast<std::size_t>(n_));
        cur_cols_.reserve(static_cast<std::size_t>(n_));
        recurse(initial_cells(), false, version_);
        CanonicalRun result;
        result.order = best_order_;
        result.marked_pos = best_marked_pos_;
        result.form = to_graph6(apply_labeling(g_, best_order_));
        return result;
    }

private:
    // Colour refinement: start from (marked?, degree), then repeatedly rank vertices
    // by (own colour, sorted neighbour colours) until the partition stops splitting.
    std::vector<std::uint64_t> initial_cells() const {
        std::vector<int> colour(static_cast<std::size_t>(n_));
        {
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v = 0; v < n_; ++v)
                keyed.push_back({{v == mark_ ? 1 : 0, g_.degree(v)}, v});
            assign_ranks(keyed, colour);
        }
        int classes = count_classes(colour);
        for (int round = 0; round < n_; ++round) {
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v = 0; v < n_; ++v) {
                std::vector<int> key{colour[static_cast<std::size_t>(v)]};
                std::vector<int> nbr;
                for (std::uint64_t m = g_.neighbour_mask(v); m;) {
                    nbr.push_back(colour[static_cast<std::size_t>(std::countr_zero(m))]);
                    m &= m - 1;
                }
                std::sort(nbr.begin(), nbr.end());
                key.insert(key.end(), nbr.begin(), nbr.end());
                keyed.push_back({std::move(key), v});
            }
            assign_ranks(keyed, colour);
            int now = count_classes(colour);
            if (now == classes) break;
            classes = now;
        }
        std::vector<std::uint64_t> cells;
        for (int c = 0; c < n_; ++c) {
            std::uint64_t mask = 0;
            for (int v = 0; v < n_; ++v)
                if (colour[static_cast<std::size_t>(v)] == c) mask |= Graph::bit(v);
            if (mask) cells.push_back(mask);
        }
        return cells;
    }

    static void assign_ranks(std::vector<std::pair<std::vector<int>, int>>& keyed,
                             std::vector<int>& colour) {
        std::sort(keyed.begin(), keyed.end());
        int rank = -1;
        const std::vector<int>* prev = nullptr;
        for (const auto& [key, v] : keyed) {
            if (!prev || key != *prev) ++rank;
            colour[static_cast<std::size_t>(v)] = rank;
            prev = &key;
        }
    }

    static int count_classes(const std::vector<int>& colour) {
        int mx = -1;
        for (int c : colour) mx = std::max(mx, c);
        return mx + 1;
    }

    // Column bits of v against the placed prefix, MSB = adjacency to placed_[0].
    std::uint64_t column_of(int v) const {
        std::uint64_t col = 0;
        std::size_t depth = placed_.size();
        for (std::size_t i = 0; i < depth; ++i)
            if (g_.neighbour_mask(v) & Graph::bit(placed_[i]))
                col |= 1ull << (depth - 1 - i);
        return col;
    }

    static std::vector<std::uint64_t> split_cells(const std::vector<std::uint64_t>& cells,
                                                  std::uint64_t removed, std::uint64_t nbr) {
        std::vector<std::uint64_t> out;
        out.reserve(cells.size() + 1);
        for (std::uint64_t cell : cells) {
            cell &= ~removed;
            std::uint64_t a = cell & ~nbr;
            std::uint64_t b = cell & nbr;
            if (a) out.push_back(a);
            if (b) out.push_back(b);
        }
        return out;
    }

    void recurse(const std::vector<std::uint64_t>& cells, bool prefix_eq,
                 std::uint64_t version_at_entry) {
        int depth = static_cast<int>(placed_.size());
        if (depth == n_) {
            leaf(prefix_eq);
            return;
        }

        std::uint64_t first = cells.front();
        std::uint64_t mincol = ~0ull;
        for (std::uint64_t m = first; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            mincol = std::min(mincol, column_of(v));
        }

        std::vector<int> tried;
        for (std::uint64_t m = first; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (column_of(v) != mincol) continue;

            // A best found under an earlier sibling descends through this node,
            // so our prefix matches it from that point on.
            bool eq = prefix_eq || version_ != version_at_entry;
            bool child_eq = false;
            if (have_best_ && eq) {
                if (mincol > best_cols_[static_cast<std::size_t>(depth)]) return;
                child_eq = mincol == best_cols_[static_cast<std::size_t>(depth)];
            }
            if (skip_by_automorphism(tried, v)) continue;
            tried.push_back(v);

            placed_.push_back(v);
            cur_cols_.push_back(mincol);
            recurse(split_cells(cells, Graph::bit(v), g_.neighbour_mask(v)), child_eq, version_);
            placed_.pop_back();
            cur_cols_.pop_back();
        }
    }

    void leaf(bool prefix_eq) {
        if (!have_best_ || !prefix_eq) {
            have_best_ = true;
            best_cols_ = cur_cols_;
            best_order_ = placed_;
            best_marked_pos_ = marked_pos_now();
            ++version_;
            return;
        }
        // Same string as the current best: the two labellings differ by an automorphism.
        if (static_cast<int>(autos_.size()) < auto_cap && placed_ != best_order_) {
            std::vector<int> sigma(static_cast<std::size_t>(n_));
            for (int p = 0; p < n_; ++p)
                sigma[static_cast<std::size_t>(placed_[static_cast<std::size_t>(p)])] =
                    best_order_[static_cast<std::size_t>(p)];
            autos_.push_back(std::move(sigma));
        }
        if (mark_ >= 0) best_marked_pos_ = std::min(best_marked_pos_, marked_pos_now());
    }

    int marked_pos_now() const {
        if (mark_ < 0) return -1;
        for (int p = 0; p < n_; ++p)
            if (placed_[static_cast<std::size_t>(p)] == mark_) return p;
        return -1;
    }

    // Skip v if a known automorphism fixes every placed vertex and carries an
    // already-tried sibling onto v; the two subtrees then mirror each other.
    bool skip_by_automorphism(const std::vector<int>& tried, int v) const {
        for (const auto& sigma : autos_) {
            bool fixes = true;
            for (int p : placed_)
                if (sigma[static_cast<std::size_t>(p)] != p) { fixes = false; break; }
            if (!fixes) continue;
            for (int u : tried)
                if (sigma[static_cast<std::size_t>(u)] == v) return true;
        }
        return false;
    }

    static constexpr int auto_cap = 64;

    const Graph& g_;
    int n_;
    int mark_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_cols_;
    std::vector<int> best_order_;
    int best_marked_pos_ = -1;
    std::uint64_t version_ = 0;
    std::vector<std::vector<int>> autos_;
    std::vector<int> placed_;
    std::vector<std::uint64_t> cur_cols_;
};

inline CanonicalRun canonical_run(const Graph& g, int mark = -1) {
    return CanonicalSearch(g, mark).run();
}

} // namespace detail

// Canonical form as a graph6 string: equal strings iff isomorphic.
inline std::string canonical_form(const Graph& g) {
    return detail::canonical_run(g).form;
}

// order[p] = original vertex placed at canonical position p.
inline std::vector<int> canonical_labeling(const Graph& g) {
    return detail::canonical_run(g).order;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() > 0) {
        auto da = degree_profile(a).degrees;
        auto db = degree_profile(b).degrees;
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return false;
    }
    return canonical_form(a) == canonical_form(b);
}

} // namespace degencrit
