#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bv/chart.hpp"
#include "bv/weave.hpp"

namespace bv {

// Binary tree of a two-strand Demazure weave. Vertices are numbered top-down.
struct TreeVertex {
    int left = -1;    // vertex feeding the upper-left edge, -1 for a top edge
    int right = -1;   // same for the upper-right edge
    int lower = -1;   // vertex consuming the lower edge, -1 at the bottom
    bool from_left = false;  // the lower edge is the upper-left edge of `lower`
    int first = 0;    // leftmost top crossing above (1-based)
    int last = 0;     // rightmost top crossing above
};

// Short I-cycle from vertex `start` down to vertex `end`.
struct Cycle {
    int start = 0;
    int end = 0;
    std::string str() const;
};

// Edges of a weave between consecutive events; vertices are the events.
struct WeaveEdge {
    int letter = 0;
    int upper = -1;    // event above, -1 at the top slice
    int lower = -1;    // event below, -1 at the bottom slice
    int top_pos = 0;   // 1-based crossing when upper = -1
};

struct WeaveGraph {
    std::vector<WeaveEdge> edges;
    std::vector<std::vector<int>> upper;  // per event, edges above it left to right
    std::vector<std::vector<int>> lower;  // per event, edges below it left to right
};

WeaveGraph weave_graph(const Weave& w);

// A relative cycle: leaves its trivalent vertex on the upper-left edge and
// climbs; at a trivalent vertex it turns onto the upper-right edge, at a
// hexavalent vertex it keeps its slope, at a tetravalent vertex it goes straight.
struct SPath {
    int vertex = 0;            // trivalent vertex, top-down
    int event = 0;
    std::vector<int> edges;    // edges climbed
    std::vector<int> through;  // events passed on the way up
    int chord = 0;             // top crossing reached
};

// Absolute cycle given as integer weights on edges.
using EdgeCycle = std::map<int, int>;
// Pairing of s-paths with edge cycles: the weights of the climbed edges summed.
std::vector<std::vector<int>> shared_edge_pairing(const std::vector<SPath>& paths, const std::vector<EdgeCycle>& cycles);

struct CycleBasis {
    int n = 2;
    std::vector<TreeVertex> vertices;
    std::vector<Cycle> cycles;
    std::vector<SPath> s_paths;
    std::vector<std::vector<int>> intersection;  // cycles x cycles
    std::vector<std::vector<int>> pairing;       // s-paths x cycles
    int rank() const { return static_cast<int>(cycles.size()); }
};

// Rank of the lattice spanned by the cycle monomials in the s-variables.
int cycle_lattice_rank(const CycleBasis& b);

std::vector<TreeVertex> weave_tree(const Weave& w);
CycleBasis i_cycle_basis(const Weave& w);
std::vector<SPath> s_paths(const Weave& w);

// Exponents of the s-variables in each cycle monomial: rows of the inverse of
// the square pairing block (s-paths of starting vertices against cycles).
// `s_rows[j]` names the s-path row paired with cycle j.
std::vector<std::vector<long>> cycle_monomials(const std::vector<std::vector<int>>& pairing,
                                               const std::vector<int>& s_rows);
std::vector<std::vector<long>> cycle_monomials(const CycleBasis& b);
// Reverse direction: each s as a monomial in the cycles.
std::string s_relations(const std::vector<std::vector<int>>& pairing, int rows);

struct ACoordinate {
    std::vector<long> exponents;  // indexed by s-path
    RationalExpr monomial;        // in the chart parameters s_c
    RationalExpr value;           // polynomial in z
    std::optional<std::pair<int, int>> plucker;
    std::string label() const;
};

// (2,2)-entry of B(z_a) ... B(z_{b-2}); 1 when b = a + 1.
RationalExpr plucker(int a, int b);

// Cycle monomials read through the inverse of `chart`; s-path k is the chart
// parameter s_c of the chord it reaches. Throws NotPolynomial.
std::vector<ACoordinate> a_coordinates(const CycleBasis& b, const ChartMap& chart);
std::vector<ACoordinate> a_coordinates(const BraidWord& beta, const std::vector<int>& order);
// Diagonal (first, last + 1) of each cycle's start vertex.
std::vector<std::pair<int, int>> triangulation_diagonals(const CycleBasis& b);

struct Quiver {
    std::vector<std::vector<int>> b;  // skew-symmetric exchange matrix
    int size() const { return static_cast<int>(b.size()); }
    int arrows(int i, int j) const { return b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool operator==(const Quiver& o) const { return b == o.b; }
    std::string str() const;
};

Quiver quiver(const CycleBasis& b);
Quiver quiver_from_matrix(const std::vector<std::vector<int>>& m);
Quiver mutate(const Quiver& q, int k);
Quiver dynkin_quiver(char type, int rank);
bool isomorphic(const Quiver& a, const Quiver& b);
// Mutation sequences of length at most `depth` from a; returns one reaching b up to isomorphism.
std::optional<std::vector<int>> mutation_path(const Quiver& a, const Quiver& b, int depth = 6);
std::string export_dot(const Quiver& q);

// Monomials of the exchange relation at k, over arrows into and out of k.
struct ExchangeMonomials {
    RationalExpr in;
    RationalExpr out;
};
ExchangeMonomials exchange_monomials(const Quiver& q, const std::vector<RationalExpr>& a, int k);

}  // namespace bv
