#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bv/braid.hpp"

namespace bv {

enum class Branch { Root, Invert, Vanish };

struct StrataNode {
    std::vector<int> word;         // slice before the split moves
    std::vector<MoveStep> moves;   // braid moves bringing a doubled letter to `split`
    int split = -1;                // doubled letter at split, split+1 after the moves
    Branch branch = Branch::Root;  // how this node was reached from its parent
    int parent = -1;
    int invert = -1;               // child with z != 0 (trivalent vertex)
    int vanish = -1;               // child with z = 0 (cup)
    bool dead = false;             // Demazure product is no longer w0
    int a = 0;                     // cups on the path from the root
    int b = 0;                     // trivalent vertices on the path
    bool leaf() const { return invert < 0 && vanish < 0; }
};

struct StrataTree {
    int n = 1;
    std::vector<StrataNode> nodes;
    // multiplicity of each live stratum C^a x (C*)^b, keyed by (a, b)
    std::map<std::pair<int, int>, long> strata() const;
};

// seed 0 splits at the first descent of the word; other seeds pick a random
// doubled letter reachable by at most 64 braid-move words, falling back to the descent.
StrataTree stratify(const BraidWord& gamma, std::uint64_t seed = 0);

struct PointCountPolynomial {
    std::map<std::pair<int, int>, long> strata;  // (a, b) -> multiplicity
    std::vector<long> coeffs;                     // expanded, coefficient of q^k
    long eval(long q) const;
    std::string strata_str() const;               // e.g. (q-1)^3 + 2q(q-1)
    std::string str() const;                      // expanded, e.g. q^3 - q^2 + q - 1
    bool operator==(const PointCountPolynomial& o) const { return coeffs == o.coeffs; }
};

PointCountPolynomial count_polynomial(const StrataTree& t);
// For X0(beta Delta; w0).
PointCountPolynomial point_count_polynomial(const BraidWord& beta, std::uint64_t seed = 0);

// Exhaustive count of X0(word; pi)(F_q); q prime, q^l <= 1e8.
long brute_count(const BraidWord& word, const Permutation& pi, long q);

}  // namespace bv
