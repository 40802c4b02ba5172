#pragma once

#include <string>
#include <vector>

#include "bv/ring.hpp"

namespace bv {

// One-line notation, 1-indexed: w(j) = img[j-1].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);
    static Permutation longest(int n);
    static Permutation simple(int n, int i);
    static Permutation parse(const std::string& text);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& image() const { return img_; }
    // (v*w)(j) = v(w(j)), so permutation matrices multiply the same way
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    Permutation times_simple(int i) const;  // w s_i
    int length() const;
    int cycle_count() const;
    bool is_identity() const;
    // l(w s_i) < l(w)
    bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
    // l(s_i w) < l(w)
    bool left_descent(int i) const;
    std::vector<int> reduced_word() const;
    MatrixExpr matrix() const { return MatrixExpr::permutation(img_); }
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }
    std::string str() const;

private:
    std::vector<int> img_;
};

// Element e_w of the 0-Hecke monoid: e_w * e_i = e_{w s_i} if l(w s_i) > l(w), else e_w.
class NilHeckeElement {
public:
    explicit NilHeckeElement(Permutation w) : w_(std::move(w)) {}
    const Permutation& perm() const { return w_; }
    NilHeckeElement star(int i) const;
    NilHeckeElement operator*(const NilHeckeElement& o) const;
    bool operator==(const NilHeckeElement& o) const { return w_ == o.w_; }

private:
    Permutation w_;
};

class BraidWord {
public:
    BraidWord() = default;
    BraidWord(int n, std::vector<int> letters);
    BraidWord(int n, std::vector<int> letters, std::vector<Var> vars);

    int n() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int k) const { return letters_[static_cast<std::size_t>(k)]; }
    Var variable(int k) const { return vars_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& letters() const { return letters_; }
    const std::vector<Var>& vars() const { return vars_; }
    std::vector<RationalExpr> values() const;
    // renames variables to family1, family2, ... starting at `start`
    BraidWord renamed(const std::string& family, int start = 1) const;
    BraidWord concat(const BraidWord& o) const;
    BraidWord sub(int from, int to) const;
    std::string letters_str() const;
    std::string str() const;  // "B3: 1 2 1"
    bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_ && vars_ == o.vars_; }

private:
    int n_ = 1;
    std::vector<int> letters_;
    std::vector<Var> vars_;
};

// "1 2 1" with explicit n, fresh variables z1..zl
BraidWord parse_braid(const std::string& text, int n);
// "B3: 1 2 1"
BraidWord parse_braid_spec(const std::string& text);
BraidWord half_twist_word(int n);
// Delta with variables family1.. starting at `start`
BraidWord half_twist_word(int n, const std::string& family, int start = 1);

Permutation coxeter_image(const BraidWord& w);
Permutation coxeter_image(int n, const std::vector<int>& letters);
int word_length(const BraidWord& w);
int cycle_count(const BraidWord& w);
bool is_reduced(int n, const std::vector<int>& letters);
Permutation demazure_product(const BraidWord& w);
Permutation demazure_product(int n, const std::vector<int>& letters);

MatrixExpr braid_block(int n, int i, const RationalExpr& z);
MatrixExpr braid_block_inv(int n, int i, const RationalExpr& z);
MatrixExpr braid_matrix(const BraidWord& w);
MatrixExpr braid_matrix(int n, const std::vector<int>& letters, const std::vector<RationalExpr>& values);

enum class MoveKind { R3Up, R3Down, Comm };

struct MoveResult {
    BraidWord word;
    // values of the new word's variables in terms of the old ones
    Bindings sigma;
    // the same as a positional list: new value at each position
    std::vector<RationalExpr> values;
};

// The new word keeps the variable ids position by position.
MoveResult apply_braid_move(const BraidWord& w, int pos, MoveKind kind);
// Letters after a move, without algebra; PatternMismatch if it does not apply.
std::vector<int> move_letters(const std::vector<int>& letters, int pos, MoveKind kind);
// Local value change for a move applied to a list of values
std::vector<RationalExpr> move_values(const std::vector<RationalExpr>& vals, int pos, MoveKind kind);
bool move_applies(const std::vector<int>& letters, int pos, MoveKind kind);

struct MoveStep {
    int pos;
    MoveKind kind;
};
// All moves applicable to a word.
std::vector<MoveStep> available_moves(const std::vector<int>& letters);
// Shortest braid-move path between two words with equal image (BFS).
std::optional<std::vector<MoveStep>> braid_path(int n, const std::vector<int>& from, const std::vector<int>& to,
                                                std::size_t cap = 200000);

int exchange_index(const BraidWord& reduced, int i);
int exchange_index(int n, const std::vector<int>& reduced, int i);

std::string kind_name(MoveKind k);

}  // namespace bv

namespace bv {

// In-place products with a single braid block, touching two rows or columns.
void left_mul_braid(MatrixExpr& m, int i, const RationalExpr& z);
void right_mul_braid(MatrixExpr& m, int i, const RationalExpr& z);
void right_mul_braid_inv(MatrixExpr& m, int i, const RationalExpr& z);
void left_mul_braid_inv(MatrixExpr& m, int i, const RationalExpr& z);

}  // namespace bv
