#include "bv/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace bv {

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<int> seen(img_.size() + 1, 0);
    for (int x : img_) {
        if (x < 1 || x > n() || seen[static_cast<std::size_t>(x)]++)
            throw Error(ErrorKind::IndexOutOfRange, "not a permutation");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = n - j;
    return Permutation(v);
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(i) + " out of range");
    return identity(n).times_simple(i);
}

Permutation Permutation::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '[' && c != ']' && c != ',') t += c;
    std::istringstream in(t);
    std::vector<int> v;
    int x;
    while (in >> x) v.push_back(x);
    return Permutation(v);
}

Permutation Permutation::operator*(const Permutation& o) const {
    std::vector<int> r(img_.size());
    for (int j = 1; j <= n(); ++j) r[static_cast<std::size_t>(j - 1)] = (*this)(o(j));
    return Permutation(r);
}

Permutation Permutation::inverse() const {
    std::vector<int> r(img_.size());
    for (int j = 1; j <= n(); ++j) r[static_cast<std::size_t>((*this)(j) - 1)] = j;
    return Permutation(r);
}

Permutation Permutation::times_simple(int i) const {
    Permutation r = *this;
    std::swap(r.img_[static_cast<std::size_t>(i - 1)], r.img_[static_cast<std::size_t>(i)]);
    return r;
}

int Permutation::length() const {
    int l = 0;
    for (int a = 0; a < n(); ++a)
        for (int b = a + 1; b < n(); ++b)
            if (img_[static_cast<std::size_t>(a)] > img_[static_cast<std::size_t>(b)]) ++l;
    return l;
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(img_.size() + 1, false);
    int c = 0;
    for (int j = 1; j <= n(); ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        ++c;
        for (int k = j; !seen[static_cast<std::size_t>(k)]; k = (*this)(k)) seen[static_cast<std::size_t>(k)] = true;
    }
    return c;
}

bool Permutation::is_identity() const { return *this == identity(n()); }

bool Permutation::left_descent(int i) const { return inverse().right_descent(i); }

std::vector<int> Permutation::reduced_word() const {
    // peel right descents: w = (w s_i) s_i
    std::vector<int> word;
    Permutation w = *this;
    while (true) {
        int i = 1;
        while (i < n() && !w.right_descent(i)) ++i;
        if (i >= n()) break;
        word.push_back(i);
        w = w.times_simple(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (std::size_t j = 0; j < img_.size(); ++j) s += (j ? " " : "") + std::to_string(img_[j]);
    return s + "]";
}

NilHeckeElement NilHeckeElement::star(int i) const {
    return w_.right_descent(i) ? *this : NilHeckeElement(w_.times_simple(i));
}

NilHeckeElement NilHeckeElement::operator*(const NilHeckeElement& o) const {
    NilHeckeElement r = *this;
    for (int i : o.w_.reduced_word()) r = r.star(i);
    return r;
}

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    for (std::size_t k = 0; k < letters_.size(); ++k) vars_.push_back(var("z", static_cast<int>(k + 1)));
    for (int i : letters_)
        if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(i) + " out of range for n=" + std::to_string(n_));
}

BraidWord::BraidWord(int n, std::vector<int> letters, std::vector<Var> vars)
    : n_(n), letters_(std::move(letters)), vars_(std::move(vars)) {
    if (vars_.size() != letters_.size()) throw Error(ErrorKind::IndexOutOfRange, "one variable per letter required");
    for (int i : letters_)
        if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(i) + " out of range for n=" + std::to_string(n_));
    auto s = vars_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorKind::IndexOutOfRange, "repeated crossing variable");
}

std::vector<RationalExpr> BraidWord::values() const {
    std::vector<RationalExpr> v;
    for (Var x : vars_) v.push_back(RationalExpr::variable(x));
    return v;
}

BraidWord BraidWord::renamed(const std::string& family, int start) const {
    std::vector<Var> vs;
    for (std::size_t k = 0; k < letters_.size(); ++k) vs.push_back(var(family, start + static_cast<int>(k)));
    return BraidWord(n_, letters_, vs);
}

BraidWord BraidWord::concat(const BraidWord& o) const {
    auto l = letters_;
    l.insert(l.end(), o.letters_.begin(), o.letters_.end());
    auto v = vars_;
    v.insert(v.end(), o.vars_.begin(), o.vars_.end());
    return BraidWord(n_, l, v);
}

BraidWord BraidWord::sub(int from, int to) const {
    return BraidWord(n_, std::vector<int>(letters_.begin() + from, letters_.begin() + to),
                     std::vector<Var>(vars_.begin() + from, vars_.begin() + to));
}

std::string BraidWord::letters_str() const {
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) s += (k ? " " : "") + std::to_string(letters_[k]);
    return s;
}

std::string BraidWord::str() const {
    std::string l = letters_str();
    return "B" + std::to_string(n_) + ":" + (l.empty() ? "" : " " + l);
}

BraidWord parse_braid(const std::string& text, int n) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int x = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            letters.push_back(x);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::ParseError, "bad generator '" + tok + "'");
        }
    }
    return BraidWord(n, letters);
}

BraidWord parse_braid_spec(const std::string& text) {
    auto colon = text.find(':');
    std::size_t b = text.find_first_not_of(" \t");
    if (colon == std::string::npos || b == std::string::npos || text[b] != 'B')
        throw Error(ErrorKind::ParseError, "expected 'B<n>: ...', got '" + text + "'");
    int n = 0;
    try {
        n = std::stoi(text.substr(b + 1, colon - b - 1));
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad strand count in '" + text + "'");
    }
    if (n < 1) throw Error(ErrorKind::ParseError, "strand count must be positive");
    return parse_braid(text.substr(colon + 1), n);
}

BraidWord half_twist_word(int n) { return half_twist_word(n, "z", 1); }

BraidWord half_twist_word(int n, const std::string& family, int start) {
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be positive");
    std::vector<int> l;
    for (int top = n - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) l.push_back(i);
    return BraidWord(n, l).renamed(family, start);
}

Permutation coxeter_image(int n, const std::vector<int>& letters) {
    Permutation w = Permutation::identity(n);
    for (int i : letters) w = w.times_simple(i);
    return w;
}

Permutation coxeter_image(const BraidWord& w) { return coxeter_image(w.n(), w.letters()); }

int word_length(const BraidWord& w) { return w.length(); }

int cycle_count(const BraidWord& w) { return coxeter_image(w).cycle_count(); }

bool is_reduced(int n, const std::vector<int>& letters) {
    return coxeter_image(n, letters).length() == static_cast<int>(letters.size());
}

Permutation demazure_product(int n, const std::vector<int>& letters) {
    NilHeckeElement e(Permutation::identity(n));
    for (int i : letters) e = e.star(i);
    return e.perm();
}

Permutation demazure_product(const BraidWord& w) { return demazure_product(w.n(), w.letters()); }

MatrixExpr braid_block(int n, int i, const RationalExpr& z) {
    if (i < 1 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "generator out of range");
    MatrixExpr m = MatrixExpr::identity(n);
    m(i - 1, i - 1) = RationalExpr(0);
    m(i - 1, i) = RationalExpr(1);
    m(i, i - 1) = RationalExpr(1);
    m(i, i) = z;
    return m;
}

MatrixExpr braid_block_inv(int n, int i, const RationalExpr& z) {
    MatrixExpr m = MatrixExpr::identity(n);
    m(i - 1, i - 1) = -z;
    m(i - 1, i) = RationalExpr(1);
    m(i, i - 1) = RationalExpr(1);
    m(i, i) = RationalExpr(0);
    return m;
}

MatrixExpr braid_matrix(int n, const std::vector<int>& letters, const std::vector<RationalExpr>& values) {
    // right multiplication by B_i(z) only touches columns i, i+1
    MatrixExpr m = MatrixExpr::identity(n);
    for (std::size_t k = 0; k < letters.size(); ++k) {
        int c = letters[k] - 1;
        if (c < 0 || c + 1 >= n) throw Error(ErrorKind::IndexOutOfRange, "generator out of range");
        const RationalExpr& z = values[k];
        for (int r = 0; r < n; ++r) {
            RationalExpr a = m(r, c), b = m(r, c + 1);
            m(r, c) = b;
            m(r, c + 1) = z.is_zero() ? a : a + b * z;
        }
    }
    return m;
}

MatrixExpr braid_matrix(const BraidWord& w) { return braid_matrix(w.n(), w.letters(), w.values()); }

std::string kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::R3Up: return "r3_up";
    case MoveKind::R3Down: return "r3_down";
    case MoveKind::Comm: return "comm";
    }
    return "?";
}

bool move_applies(const std::vector<int>& l, int pos, MoveKind kind) {
    int len = static_cast<int>(l.size());
    if (pos < 0) return false;
    auto at = [&](int k) { return l[static_cast<std::size_t>(k)]; };
    switch (kind) {
    case MoveKind::R3Up: return pos + 2 < len && at(pos) == at(pos + 2) && at(pos + 1) == at(pos) + 1;
    case MoveKind::R3Down: return pos + 2 < len && at(pos) == at(pos + 2) && at(pos + 1) == at(pos) - 1;
    case MoveKind::Comm: return pos + 1 < len && std::abs(at(pos) - at(pos + 1)) >= 2;
    }
    return false;
}

std::vector<int> move_letters(const std::vector<int>& letters, int pos, MoveKind kind) {
    if (!move_applies(letters, pos, kind))
        throw Error(ErrorKind::PatternMismatch, kind_name(kind) + " does not apply at position " + std::to_string(pos));
    auto r = letters;
    auto p = static_cast<std::size_t>(pos);
    if (kind == MoveKind::Comm) {
        std::swap(r[p], r[p + 1]);
    } else {
        int i = r[p], j = r[p + 1];
        r[p] = j;
        r[p + 1] = i;
        r[p + 2] = j;
    }
    return r;
}

std::vector<RationalExpr> move_values(const std::vector<RationalExpr>& vals, int pos, MoveKind kind) {
    auto r = vals;
    auto p = static_cast<std::size_t>(pos);
    if (kind == MoveKind::Comm) {
        std::swap(r[p], r[p + 1]);
    } else {
        const RationalExpr &z1 = vals[p], &z2 = vals[p + 1], &z3 = vals[p + 2];
        r[p] = z3;
        r[p + 1] = kind == MoveKind::R3Up ? z2 - z1 * z3 : z2 + z1 * z3;
        r[p + 2] = z1;
    }
    return r;
}

MoveResult apply_braid_move(const BraidWord& w, int pos, MoveKind kind) {
    auto letters = move_letters(w.letters(), pos, kind);
    MoveResult res{BraidWord(w.n(), letters, w.vars()), {}, move_values(w.values(), pos, kind)};
    for (int k = 0; k < w.length(); ++k) {
        const RationalExpr& v = res.values[static_cast<std::size_t>(k)];
        if (v != RationalExpr::variable(w.variable(k))) res.sigma[w.variable(k)] = v;
    }
    return res;
}

std::vector<MoveStep> available_moves(const std::vector<int>& letters) {
    std::vector<MoveStep> out;
    for (int p = 0; p < static_cast<int>(letters.size()); ++p)
        for (MoveKind k : {MoveKind::R3Up, MoveKind::R3Down, MoveKind::Comm})
            if (move_applies(letters, p, k)) out.push_back({p, k});
    return out;
}

std::optional<std::vector<MoveStep>> braid_path(int n, const std::vector<int>& from, const std::vector<int>& to,
                                                std::size_t cap) {
    if (from.size() != to.size() || coxeter_image(n, from) != coxeter_image(n, to)) {
        if (from != to) return std::nullopt;
    }
    if (from == to) return std::vector<MoveStep>{};
    std::map<std::vector<int>, std::pair<std::vector<int>, MoveStep>> parent;
    std::queue<std::vector<int>> q;
    parent[from] = {{}, {-1, MoveKind::Comm}};
    q.push(from);
    while (!q.empty()) {
        auto cur = q.front();
        q.pop();
        for (auto& m : available_moves(cur)) {
            auto nxt = move_letters(cur, m.pos, m.kind);
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, m};
            if (nxt == to) {
                std::vector<MoveStep> path;
                for (auto x = nxt; x != from; x = parent[x].first) path.push_back(parent[x].second);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (parent.size() > cap) return std::nullopt;
            q.push(nxt);
        }
    }
    return std::nullopt;
}

int exchange_index(int n, const std::vector<int>& u, int i) {
    if (i < 1 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "generator out of range");
    Permutation w = coxeter_image(n, u);
    if (w.length() != static_cast<int>(u.size())) throw Error(ErrorKind::NotReduced, "word is not reduced");
    if (!w.right_descent(i)) throw Error(ErrorKind::LengthIncreases, "l(u s_i) > l(u)");
    // follow the two strands that s_i would cross, from the right end leftwards
    int a = i, b = i + 1;
    for (int k = static_cast<int>(u.size()); k >= 1; --k) {
        int j = u[static_cast<std::size_t>(k - 1)];
        if (std::min(a, b) == j && std::max(a, b) == j + 1) return k;
        auto sj = [j](int x) { return x == j ? j + 1 : (x == j + 1 ? j : x); };
        a = sj(a);
        b = sj(b);
    }
    throw Error(ErrorKind::NotReduced, "strands never cross");
}

int exchange_index(const BraidWord& w, int i) { return exchange_index(w.n(), w.letters(), i); }

}  // namespace bv

namespace bv {

void left_mul_braid(MatrixExpr& m, int i, const RationalExpr& z) {
    int r = i - 1;
    for (int c = 0; c < m.size(); ++c) {
        RationalExpr a = m(r, c), b = m(r + 1, c);
        m(r, c) = b;
        m(r + 1, c) = z.is_zero() ? a : a + z * b;
    }
}

void right_mul_braid(MatrixExpr& m, int i, const RationalExpr& z) {
    int c = i - 1;
    for (int r = 0; r < m.size(); ++r) {
        RationalExpr a = m(r, c), b = m(r, c + 1);
        m(r, c) = b;
        m(r, c + 1) = z.is_zero() ? a : a + b * z;
    }
}

void right_mul_braid_inv(MatrixExpr& m, int i, const RationalExpr& z) {
    int c = i - 1;
    for (int r = 0; r < m.size(); ++r) {
        RationalExpr a = m(r, c), b = m(r, c + 1);
        m(r, c) = z.is_zero() ? b : b - a * z;
        m(r, c + 1) = a;
    }
}

void left_mul_braid_inv(MatrixExpr& m, int i, const RationalExpr& z) {
    int r = i - 1;
    for (int c = 0; c < m.size(); ++c) {
        RationalExpr a = m(r, c), b = m(r + 1, c);
        m(r, c) = z.is_zero() ? b : b - z * a;
        m(r + 1, c) = a;
    }
}

}  // namespace bv
