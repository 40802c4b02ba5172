#pragma once

#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bv/braid.hpp"

namespace bv {

enum class EventKind { Three, Six, Four, Cup, Cap };

// One vertex of a weave, acting on the slice above it at position `pos` (0-based).
struct WeaveEvent {
    EventKind kind = EventKind::Three;
    int pos = 0;
    int letter = 0;   // cap: inserted generator
    bool up = true;   // six: (i, i+1, i) -> (i+1, i, i+1) when true
    bool operator==(const WeaveEvent& o) const {
        return kind == o.kind && pos == o.pos && letter == o.letter && (kind != EventKind::Six || up == o.up);
    }
    bool operator!=(const WeaveEvent& o) const { return !(*this == o); }
};

WeaveEvent three(int p);
WeaveEvent six(int p);
WeaveEvent four(int p);
WeaveEvent cup(int p);
WeaveEvent cap(int p, int i);

std::string kind_name(EventKind k);

// Applies one event to a slice; fills the direction of six events.
std::vector<int> apply_event(int n, const std::vector<int>& slice, WeaveEvent& ev);

class Weave {
public:
    Weave() = default;
    Weave(int n, std::vector<int> top, std::vector<WeaveEvent> events = {});

    int n() const { return n_; }
    const std::vector<int>& top() const { return top_; }
    const std::vector<WeaveEvent>& events() const { return events_; }
    std::vector<WeaveEvent>& events() { return events_; }
    bool operator==(const Weave& o) const { return n_ == o.n_ && top_ == o.top_ && events_ == o.events_; }
    bool operator!=(const Weave& o) const { return !(*this == o); }

private:
    int n_ = 1;
    std::vector<int> top_;
    std::vector<WeaveEvent> events_;
};

struct WeaveSlices {
    std::vector<std::vector<int>> slices;  // slices[j] lies above event j
    bool simplifying = true;               // no caps
    bool demazure = true;                  // no caps, no cups
    int trivalent = 0;
    int cups = 0;
    int caps = 0;
    const std::vector<int>& bottom() const { return slices.back(); }
};

// Computes all slices; throws PatternMismatch naming the first bad event.
// Demazure weaves are also checked for a constant Demazure product.
WeaveSlices validate(Weave& w);
WeaveSlices validate(const Weave& w);

Weave parse_weave(const std::string& text);
std::string serialize(const Weave& w);
std::string export_dot(const Weave& w);

// Opening the crossings of beta in the given order (1-based crossing indices).
Weave weave_from_opening_order(const BraidWord& beta, const std::vector<int>& order);

// Demazure weave from `from` to a reduced word of its Demazure product, then
// by braid moves to `to` when given. Events are positioned inside a window at `offset`.
std::vector<WeaveEvent> demazure_reduction(int n, const std::vector<int>& from, std::vector<int>* result,
                                           int offset = 0);

// Polygon with vertices 0..m-1. Side k (k = 1..m-1) joins k-1 and k and carries
// the k-th letter; the base joins 0 and m-1.
struct Triangulation {
    int n = 1;
    std::vector<int> letters;
    std::set<std::pair<int, int>> diagonals;
    // labels for every edge (sides, diagonals and base), keyed by (a, b), a < b
    std::map<std::pair<int, int>, Permutation> labels;

    int vertex_count() const { return static_cast<int>(letters.size()) + 1; }
    // triangles as (a, c, b) with a < c < b
    std::vector<std::array<int, 3>> triangles() const;
    int defect(const std::array<int, 3>& t) const;
    int total_defect() const;
};

// Demazure labels on the polygon of beta Delta for the given diagonals.
Triangulation demazure_triangulation(const BraidWord& beta, const std::set<std::pair<int, int>>& diagonals);
Triangulation fan_triangulation(const BraidWord& beta, int apex = -1);
Triangulation random_triangulation(const BraidWord& beta, std::mt19937_64& rng);
// InvalidLabels unless every triangle reads u, v, u * v (Demazure product).
void check_labels(const Triangulation& t);
Weave weave_from_triangulation(const Triangulation& t);

// Local equivalence moves. Each catalog entry has two sides, sequences of
// events relative to a window; apply_move replaces the side found at
// events[index..] (positions relative to pos) by the other side.
struct MoveRule {
    std::string id;
    std::vector<WeaveEvent> lhs;
    std::vector<WeaveEvent> rhs;
};
const std::vector<MoveRule>& move_catalog();
Weave apply_move(const Weave& w, const std::string& id, int index, int pos);
// Exchanges the heights of events index and index+1 acting on disjoint windows.
Weave exchange_heights(const Weave& w, int index);

Weave mutate(const Weave& w, int index);

struct MutationGraph {
    std::vector<std::string> keys;            // canonical class key per vertex
    std::vector<std::vector<int>> orders;     // a representative opening order per vertex
    std::set<std::pair<int, int>> edges;
    std::string proxy;                        // class proxy used
    int vertex_count() const { return static_cast<int>(keys.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

MutationGraph mutation_graph(const BraidWord& beta);
std::string export_dot(const MutationGraph& g);

// For n = 2, the bracketing of leaves produced by an opening order.
std::string tree_shape(int length, const std::vector<int>& order);

}  // namespace bv
