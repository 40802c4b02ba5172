#include "bv/weave.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bv {

WeaveEvent three(int p) { return {EventKind::Three, p, 0, true}; }
WeaveEvent six(int p) { return {EventKind::Six, p, 0, true}; }
WeaveEvent four(int p) { return {EventKind::Four, p, 0, true}; }
WeaveEvent cup(int p) { return {EventKind::Cup, p, 0, true}; }
WeaveEvent cap(int p, int i) { return {EventKind::Cap, p, i, true}; }

std::string kind_name(EventKind k) {
    switch (k) {
    case EventKind::Three: return "three";
    case EventKind::Six: return "six";
    case EventKind::Four: return "four";
    case EventKind::Cup: return "cup";
    case EventKind::Cap: return "cap";
    }
    return "?";
}

namespace {

int in_width(EventKind k) {
    switch (k) {
    case EventKind::Three: return 2;
    case EventKind::Six: return 3;
    case EventKind::Four: return 2;
    case EventKind::Cup: return 2;
    case EventKind::Cap: return 0;
    }
    return 0;
}

int out_width(EventKind k) {
    switch (k) {
    case EventKind::Three: return 1;
    case EventKind::Six: return 3;
    case EventKind::Four: return 2;
    case EventKind::Cup: return 0;
    case EventKind::Cap: return 2;
    }
    return 0;
}

Error mismatch(const WeaveEvent& ev, const std::string& why) {
    return Error(ErrorKind::PatternMismatch, kind_name(ev.kind) + " at " + std::to_string(ev.pos) + ": " + why);
}

}  // namespace

std::vector<int> apply_event(int n, const std::vector<int>& slice, WeaveEvent& ev) {
    const int len = static_cast<int>(slice.size());
    const int p = ev.pos;
    if (p < 0 || p + in_width(ev.kind) > len) throw mismatch(ev, "window out of range");
    std::vector<int> out = slice;
    auto at = [&](int k) { return slice[static_cast<std::size_t>(k)]; };
    switch (ev.kind) {
    case EventKind::Three:
        if (at(p) != at(p + 1)) throw mismatch(ev, "letters differ");
        out.erase(out.begin() + p + 1);
        break;
    case EventKind::Six: {
        int a = at(p), b = at(p + 1);
        if (at(p + 2) != a || std::abs(a - b) != 1) throw mismatch(ev, "not i j i with |i-j| = 1");
        ev.up = b == a + 1;
        out[static_cast<std::size_t>(p)] = b;
        out[static_cast<std::size_t>(p + 1)] = a;
        out[static_cast<std::size_t>(p + 2)] = b;
        break;
    }
    case EventKind::Four:
        if (std::abs(at(p) - at(p + 1)) < 2) throw mismatch(ev, "letters not distant");
        std::swap(out[static_cast<std::size_t>(p)], out[static_cast<std::size_t>(p + 1)]);
        break;
    case EventKind::Cup:
        if (at(p) != at(p + 1)) throw mismatch(ev, "letters differ");
        out.erase(out.begin() + p, out.begin() + p + 2);
        break;
    case EventKind::Cap:
        if (ev.letter < 1 || ev.letter >= n) throw mismatch(ev, "generator out of range");
        out.insert(out.begin() + p, 2, ev.letter);
        break;
    }
    return out;
}

Weave::Weave(int n, std::vector<int> top, std::vector<WeaveEvent> events)
    : n_(n), top_(std::move(top)), events_(std::move(events)) {
    for (int i : top_)
        if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(i));
}

WeaveSlices validate(Weave& w) {
    WeaveSlices s;
    s.slices.push_back(w.top());
    for (std::size_t j = 0; j < w.events().size(); ++j) {
        WeaveEvent& ev = w.events()[j];
        try {
            s.slices.push_back(apply_event(w.n(), s.slices.back(), ev));
        } catch (const Error& e) {
            throw Error(ErrorKind::PatternMismatch, "event " + std::to_string(j) + ": " + e.what());
        }
        if (ev.kind == EventKind::Three) ++s.trivalent;
        if (ev.kind == EventKind::Cup) ++s.cups;
        if (ev.kind == EventKind::Cap) ++s.caps;
    }
    s.simplifying = s.caps == 0;
    s.demazure = s.caps == 0 && s.cups == 0;
    if (s.demazure) {
        Permutation d = demazure_product(w.n(), w.top());
        for (std::size_t j = 1; j < s.slices.size(); ++j)
            if (demazure_product(w.n(), s.slices[j]) != d)
                throw Error(ErrorKind::PatternMismatch, "event " + std::to_string(j - 1) + ": Demazure product changes");
    }
    return s;
}

WeaveSlices validate(const Weave& w) {
    Weave copy = w;
    return validate(copy);
}

Weave parse_weave(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    std::vector<int> top;
    std::vector<WeaveEvent> events;
    bool header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail = [&](const std::string& why) {
            return Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + why);
        };
        if (!header) {
            if (word != "weave") throw fail("expected 'weave n=<n> top=...'");
            std::string tok;
            bool in_top = false;
            while (ls >> tok) {
                if (tok.rfind("n=", 0) == 0) {
                    n = std::stoi(tok.substr(2));
                    in_top = false;
                } else if (tok.rfind("top=", 0) == 0) {
                    in_top = true;
                    if (tok.size() > 4) top.push_back(std::stoi(tok.substr(4)));
                } else if (in_top) {
                    try {
                        top.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        throw fail("bad letter '" + tok + "'");
                    }
                } else {
                    throw fail("unexpected '" + tok + "'");
                }
            }
            if (n < 1) throw fail("missing n");
            header = true;
            continue;
        }
        WeaveEvent ev;
        if (word == "three") ev.kind = EventKind::Three;
        else if (word == "six") ev.kind = EventKind::Six;
        else if (word == "four") ev.kind = EventKind::Four;
        else if (word == "cup") ev.kind = EventKind::Cup;
        else if (word == "cap") ev.kind = EventKind::Cap;
        else throw fail("unknown event '" + word + "'");
        if (!(ls >> ev.pos)) throw fail("missing position");
        if (ev.kind == EventKind::Cap && !(ls >> ev.letter)) throw fail("cap needs a generator");
        std::string extra;
        if (ls >> extra) throw fail("trailing '" + extra + "'");
        events.push_back(ev);
    }
    if (!header) throw Error(ErrorKind::ParseError, "empty weave file");
    Weave w(n, top, events);
    validate(w);
    return w;
}

std::string serialize(const Weave& w) {
    std::ostringstream out;
    out << "weave n=" << w.n() << " top=";
    for (std::size_t k = 0; k < w.top().size(); ++k) out << (k ? " " : "") << w.top()[k];
    out << "\n";
    for (const auto& ev : w.events()) {
        out << kind_name(ev.kind) << " " << ev.pos;
        if (ev.kind == EventKind::Cap) out << " " << ev.letter;
        out << "\n";
    }
    return out.str();
}

std::string export_dot(const Weave& w) {
    Weave copy = w;
    auto s = validate(copy);
    std::ostringstream out;
    out << "graph weave {\n";
    std::vector<std::string> origin;
    for (std::size_t k = 0; k < w.top().size(); ++k) {
        origin.push_back("t" + std::to_string(k));
        out << "  t" << k << " [shape=point];\n";
    }
    for (std::size_t j = 0; j < copy.events().size(); ++j) {
        const auto& ev = copy.events()[j];
        const auto& above = s.slices[j];
        std::string v = "v" + std::to_string(j);
        out << "  " << v << " [label=\"" << kind_name(ev.kind) << "\"];\n";
        int win = in_width(ev.kind);
        for (int q = 0; q < win; ++q)
            out << "  " << origin[static_cast<std::size_t>(ev.pos + q)] << " -- " << v << " [label=\""
                << above[static_cast<std::size_t>(ev.pos + q)] << "\"];\n";
        origin.erase(origin.begin() + ev.pos, origin.begin() + ev.pos + win);
        origin.insert(origin.begin() + ev.pos, static_cast<std::size_t>(out_width(ev.kind)), v);
    }
    const auto& bottom = s.bottom();
    for (std::size_t k = 0; k < bottom.size(); ++k) {
        out << "  b" << k << " [shape=point];\n";
        out << "  " << origin[k] << " -- b" << k << " [label=\"" << bottom[k] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

// Braid moves taking cur[offset..] from its current window to `target`.
void emit_path(int n, std::vector<int>& cur, std::vector<WeaveEvent>& evs, int offset,
               const std::vector<int>& target) {
    std::vector<int> window(cur.begin() + offset, cur.begin() + offset + static_cast<long>(target.size()));
    if (window == target) return;
    auto path = braid_path(n, window, target);
    if (!path) throw Error(ErrorKind::PatternMismatch, "no braid-move path between words");
    for (const auto& step : *path) {
        WeaveEvent ev = step.kind == MoveKind::Comm ? four(offset + step.pos) : six(offset + step.pos);
        cur = apply_event(n, cur, ev);
        evs.push_back(ev);
    }
}

void emit(int n, std::vector<int>& cur, std::vector<WeaveEvent>& evs, WeaveEvent ev) {
    cur = apply_event(n, cur, ev);
    evs.push_back(ev);
}

}  // namespace

Weave weave_from_opening_order(const BraidWord& beta, const std::vector<int>& order) {
    const int n = beta.n();
    const int len = beta.length();
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < len; ++k)
        if (static_cast<int>(sorted.size()) != len || sorted[static_cast<std::size_t>(k)] != k + 1)
            throw Error(ErrorKind::IndexOutOfRange, "order must be a permutation of 1.." + std::to_string(len));
    const std::vector<int> delta = half_twist_word(n).letters();
    std::vector<int> cur = beta.letters();
    cur.insert(cur.end(), delta.begin(), delta.end());
    const std::vector<int> top = cur;
    std::vector<int> ids(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) ids[static_cast<std::size_t>(k)] = k + 1;
    std::vector<WeaveEvent> evs;
    const Permutation w0 = Permutation::longest(n);

    for (int c : order) {
        int p = static_cast<int>(std::find(ids.begin(), ids.end(), c) - ids.begin());
        int m = static_cast<int>(ids.size());
        int i = cur[static_cast<std::size_t>(p)];
        // crossings p+1..m-1 followed by Delta become Delta' x' with Delta' = i ..., x' = n - x
        std::vector<int> want = {i};
        auto rest = (Permutation::simple(n, i) * w0).reduced_word();
        want.insert(want.end(), rest.begin(), rest.end());
        std::vector<int> after;
        for (int q = p + 1; q < m; ++q) {
            after.push_back(cur[static_cast<std::size_t>(q)]);
            want.push_back(n - cur[static_cast<std::size_t>(q)]);
        }
        emit_path(n, cur, evs, p + 1, want);
        emit(n, cur, evs, three(p));
        ids.erase(ids.begin() + p);
        std::vector<int> back = after;
        back.insert(back.end(), delta.begin(), delta.end());
        emit_path(n, cur, evs, p, back);
    }
    return Weave(n, top, evs);
}

std::vector<WeaveEvent> demazure_reduction(int n, const std::vector<int>& from, std::vector<int>* result,
                                           int offset) {
    std::vector<int> cur = from;
    std::vector<WeaveEvent> evs;
    while (true) {
        int k = 1;
        const int len = static_cast<int>(cur.size());
        Permutation u = Permutation::identity(n);
        if (len > 0) u = u.times_simple(cur[0]);
        while (k < len && !u.right_descent(cur[static_cast<std::size_t>(k)])) {
            u = u.times_simple(cur[static_cast<std::size_t>(k)]);
            ++k;
        }
        if (k >= len) break;
        int i = cur[static_cast<std::size_t>(k)];
        std::vector<int> target = u.times_simple(i).reduced_word();
        target.push_back(i);
        std::vector<int> local(cur.begin(), cur.end());
        std::vector<WeaveEvent> step;
        emit_path(n, local, step, 0, target);
        emit(n, local, step, three(k - 1));
        for (auto ev : step) {
            ev.pos += offset;
            evs.push_back(ev);
        }
        cur = local;
    }
    if (result) *result = cur;
    return evs;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    const int m = vertex_count();
    auto is_edge = [&](int a, int b) { return b == a + 1 || (a == 0 && b == m - 1) || diagonals.count({a, b}); };
    std::vector<std::array<int, 3>> out;
    std::function<void(int, int)> rec = [&](int a, int b) {
        if (b - a < 2) return;
        for (int c = a + 1; c < b; ++c) {
            if (is_edge(a, c) && is_edge(c, b)) {
                out.push_back({a, c, b});
                rec(a, c);
                rec(c, b);
                return;
            }
        }
        throw Error(ErrorKind::InvalidLabels, "diagonals do not triangulate the polygon");
    };
    if (m >= 3) rec(0, m - 1);
    if (static_cast<int>(out.size()) != std::max(0, m - 2))
        throw Error(ErrorKind::InvalidLabels, "diagonals do not triangulate the polygon");
    return out;
}

int Triangulation::defect(const std::array<int, 3>& t) const {
    const auto& u = labels.at({t[0], t[1]});
    const auto& v = labels.at({t[1], t[2]});
    const auto& w = labels.at({t[0], t[2]});
    return u.length() + v.length() - w.length();
}

int Triangulation::total_defect() const {
    int s = 0;
    for (const auto& t : triangles()) s += defect(t);
    return s;
}

Triangulation demazure_triangulation(const BraidWord& beta, const std::set<std::pair<int, int>>& diagonals) {
    Triangulation t;
    t.n = beta.n();
    t.letters = beta.letters();
    auto delta = half_twist_word(beta.n()).letters();
    t.letters.insert(t.letters.end(), delta.begin(), delta.end());
    t.diagonals = diagonals;
    const int m = t.vertex_count();
    for (const auto& [a, b] : diagonals)
        if (a < 0 || b >= m || b - a < 2 || (a == 0 && b == m - 1))
            throw Error(ErrorKind::InvalidLabels, "bad diagonal (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    auto label = [&](int a, int b) {
        std::vector<int> sub(t.letters.begin() + a, t.letters.begin() + b);
        return demazure_product(t.n, sub);
    };
    for (int k = 1; k < m; ++k) t.labels[{k - 1, k}] = label(k - 1, k);
    if (m >= 2) t.labels[{0, m - 1}] = label(0, m - 1);
    for (const auto& d : diagonals) t.labels[d] = label(d.first, d.second);
    return t;
}

Triangulation fan_triangulation(const BraidWord& beta, int apex) {
    const int m = beta.length() + static_cast<int>(half_twist_word(beta.n()).letters().size()) + 1;
    if (apex < 0) apex = m - 1;
    if (apex >= m) throw Error(ErrorKind::IndexOutOfRange, "apex " + std::to_string(apex));
    std::set<std::pair<int, int>> d;
    for (int v = 0; v < m; ++v) {
        int a = std::min(v, apex), b = std::max(v, apex);
        if (b - a >= 2 && !(a == 0 && b == m - 1)) d.insert({a, b});
    }
    return demazure_triangulation(beta, d);
}

Triangulation random_triangulation(const BraidWord& beta, std::mt19937_64& rng) {
    const int m = beta.length() + static_cast<int>(half_twist_word(beta.n()).letters().size()) + 1;
    std::set<std::pair<int, int>> d;
    std::function<void(int, int)> rec = [&](int a, int b) {
        if (b - a < 2) return;
        std::uniform_int_distribution<int> pick(a + 1, b - 1);
        int c = pick(rng);
        if (c - a >= 2) d.insert({a, c});
        if (b - c >= 2) d.insert({c, b});
        rec(a, c);
        rec(c, b);
    };
    rec(0, m - 1);
    return demazure_triangulation(beta, d);
}

void check_labels(const Triangulation& t) {
    const int m = t.vertex_count();
    for (int k = 1; k < m; ++k) {
        auto it = t.labels.find({k - 1, k});
        if (it == t.labels.end() || it->second != Permutation::simple(t.n, t.letters[static_cast<std::size_t>(k - 1)]))
            throw Error(ErrorKind::InvalidLabels, "side " + std::to_string(k) + " must carry its letter");
    }
    for (const auto& tri : t.triangles()) {
        auto get = [&](int a, int b) {
            auto it = t.labels.find({a, b});
            if (it == t.labels.end())
                throw Error(ErrorKind::InvalidLabels, "unlabeled edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            return it->second;
        };
        auto u = get(tri[0], tri[1]), v = get(tri[1], tri[2]), w = get(tri[0], tri[2]);
        auto word = u.reduced_word();
        auto vw = v.reduced_word();
        word.insert(word.end(), vw.begin(), vw.end());
        if (demazure_product(t.n, word) != w)
            throw Error(ErrorKind::InvalidLabels, "triangle (" + std::to_string(tri[0]) + ", " + std::to_string(tri[1]) +
                                                      ", " + std::to_string(tri[2]) + ") reads " + u.str() + " * " +
                                                      v.str() + " != " + w.str());
    }
}

Weave weave_from_triangulation(const Triangulation& t) {
    check_labels(t);
    const int n = t.n;
    const int m = t.vertex_count();
    if (t.labels.at({0, m - 1}) != Permutation::longest(n))
        throw Error(ErrorKind::InvalidLabels, "base must be labeled w0");
    auto is_edge = [&](int a, int b) { return b == a + 1 || t.diagonals.count({a, b}); };
    std::vector<int> cur = t.letters;
    std::vector<WeaveEvent> evs;
    // returns the length of the reduced word occupying [offset, ...) for region (a, b)
    std::function<int(int, int, int)> build = [&](int a, int b, int offset) -> int {
        if (b == a + 1) return 1;
        int c = a + 1;
        while (!(is_edge(a, c) && is_edge(c, b))) ++c;
        int l1 = build(a, c, offset);
        int l2 = build(c, b, offset + l1);
        std::vector<int> window(cur.begin() + offset, cur.begin() + offset + l1 + l2);
        std::vector<int> reduced;
        auto step = demazure_reduction(n, window, &reduced, 0);
        for (auto ev : step) {
            ev.pos += offset;
            emit(n, cur, evs, ev);
        }
        return static_cast<int>(reduced.size());
    };
    if (m >= 3) {
        build(0, m - 1, 0);
    }
    emit_path(n, cur, evs, 0, half_twist_word(n).letters());
    return Weave(n, t.letters, evs);
}

const std::vector<MoveRule>& move_catalog() {
    static const std::vector<MoveRule> catalog = {
        {"cancel-six", {six(0), six(0)}, {}},
        {"cancel-four", {four(0), four(0)}, {}},
        {"1212", {six(0), three(2), six(0)}, {six(1), three(0)}},
        {"1121", {three(0), six(0)}, {six(1), six(0), three(2)}},
        {"1211", {three(2), six(0)}, {six(0), six(1), three(0)}},
        {"zamolodchikov",
         {four(2), six(0), six(2), four(1), four(4), six(2), six(0)},
         {six(3), six(1), four(0), four(3), six(1), six(3), four(2)}},
        {"zigzag", {cap(0, 0), cup(1)}, {}},
        {"cap-three", {cap(0, 0), three(1)}, {cap(1, 0), three(0)}},
    };
    return catalog;
}

namespace {

// Instantiates a rule side at window position pos; cap letter 0 takes the window letter.
std::vector<WeaveEvent> place(const std::vector<WeaveEvent>& side, int pos, const std::vector<int>& slice) {
    std::vector<WeaveEvent> out;
    for (auto ev : side) {
        ev.pos += pos;
        if (ev.kind == EventKind::Cap && ev.letter == 0) {
            if (pos < 0 || pos >= static_cast<int>(slice.size()))
                throw Error(ErrorKind::PatternMismatch, "cap letter needs a window letter");
            ev.letter = slice[static_cast<std::size_t>(pos)];
        }
        out.push_back(ev);
    }
    return out;
}

bool same_shape(const std::vector<WeaveEvent>& evs, std::size_t index, const std::vector<WeaveEvent>& side) {
    if (side.empty() || index + side.size() > evs.size()) return false;
    for (std::size_t k = 0; k < side.size(); ++k) {
        const auto& a = evs[index + k];
        const auto& b = side[k];
        if (a.kind != b.kind || a.pos != b.pos || (a.kind == EventKind::Cap && a.letter != b.letter)) return false;
    }
    return true;
}

}  // namespace

Weave apply_move(const Weave& w, const std::string& id, int index, int pos) {
    const MoveRule* rule = nullptr;
    for (const auto& r : move_catalog())
        if (r.id == id) rule = &r;
    if (!rule) throw Error(ErrorKind::PatternMismatch, "unknown move '" + id + "'");
    auto s = validate(w);
    if (index < 0 || index > static_cast<int>(w.events().size()))
        throw Error(ErrorKind::PatternMismatch, "event index " + std::to_string(index));
    const auto& slice = s.slices[static_cast<std::size_t>(index)];
    auto lhs = place(rule->lhs, pos, slice);
    auto rhs = place(rule->rhs, pos, slice);
    const auto& evs = w.events();
    std::vector<WeaveEvent> next(evs.begin(), evs.begin() + index);
    std::size_t resume = static_cast<std::size_t>(index);
    if (same_shape(evs, resume, lhs)) {
        next.insert(next.end(), rhs.begin(), rhs.end());
        resume += lhs.size();
    } else if (same_shape(evs, resume, rhs)) {
        next.insert(next.end(), lhs.begin(), lhs.end());
        resume += rhs.size();
    } else if (lhs.empty() || rhs.empty()) {
        auto& ins = lhs.empty() ? rhs : lhs;
        next.insert(next.end(), ins.begin(), ins.end());
    } else {
        throw Error(ErrorKind::PatternMismatch, "move '" + id + "' does not match at event " + std::to_string(index));
    }
    std::size_t replaced_end = next.size();
    next.insert(next.end(), evs.begin() + static_cast<long>(resume), evs.end());
    Weave out(w.n(), w.top(), next);
    WeaveSlices t;
    try {
        t = validate(out);
    } catch (const Error& e) {
        throw Error(ErrorKind::PatternMismatch, "move '" + id + "': " + e.what());
    }
    if (t.slices[replaced_end] != s.slices[resume])
        throw Error(ErrorKind::PatternMismatch, "move '" + id + "' changes the slice below it");
    return out;
}

Weave exchange_heights(const Weave& w, int index) {
    auto s = validate(w);
    if (index < 0 || index + 1 >= static_cast<int>(w.events().size()))
        throw Error(ErrorKind::PatternMismatch, "event index " + std::to_string(index));
    auto evs = w.events();
    WeaveEvent a = evs[static_cast<std::size_t>(index)];
    WeaveEvent b = evs[static_cast<std::size_t>(index + 1)];
    int da = out_width(a.kind) - in_width(a.kind);
    int db = out_width(b.kind) - in_width(b.kind);
    if (b.pos >= a.pos + out_width(a.kind)) {
        b.pos -= da;
    } else if (b.pos + in_width(b.kind) <= a.pos) {
        a.pos += db;
    } else {
        throw Error(ErrorKind::PatternMismatch, "events overlap");
    }
    evs[static_cast<std::size_t>(index)] = b;
    evs[static_cast<std::size_t>(index + 1)] = a;
    Weave out(w.n(), w.top(), evs);
    validate(out);
    return out;
}

Weave mutate(const Weave& w, int index) {
    auto s = validate(w);
    auto evs = w.events();
    if (index < 0 || index + 1 >= static_cast<int>(evs.size()))
        throw Error(ErrorKind::PatternMismatch, "event index " + std::to_string(index));
    auto& a = evs[static_cast<std::size_t>(index)];
    auto& b = evs[static_cast<std::size_t>(index + 1)];
    if (a.kind != EventKind::Three || b.kind != EventKind::Three)
        throw Error(ErrorKind::PatternMismatch, "mutation needs two consecutive trivalent vertices");
    if (a.pos == b.pos) {
        a.pos = b.pos + 1;
    } else if (a.pos == b.pos + 1) {
        a.pos = b.pos;
    } else {
        throw Error(ErrorKind::PatternMismatch, "trivalent vertices are not composable");
    }
    Weave out(w.n(), w.top(), evs);
    validate(out);
    return out;
}

std::string tree_shape(int length, const std::vector<int>& order) {
    std::vector<std::string> parts(static_cast<std::size_t>(length + 1), "x");
    std::vector<int> ids;
    for (int k = 1; k <= length; ++k) ids.push_back(k);
    for (int c : order) {
        auto it = std::find(ids.begin(), ids.end(), c);
        if (it == ids.end()) throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(c));
        auto p = static_cast<std::size_t>(it - ids.begin());
        parts[p] = "(" + parts[p] + parts[p + 1] + ")";
        parts.erase(parts.begin() + static_cast<long>(p) + 1);
        ids.erase(it);
    }
    std::string out;
    for (const auto& s : parts) out += s;
    return out;
}

}  // namespace bv
