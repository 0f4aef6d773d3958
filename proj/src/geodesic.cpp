#include "bordered/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>

#include "bordered/poisson.hpp"

namespace bordered {

HalfEdge leaving(Step s) { return half_edge(s.edge, s.kind == StepKind::backward ? 1 : 0); }
HalfEdge arriving(Step s) { return half_edge(s.edge, s.kind == StepKind::forward ? 1 : 0); }

// ------------------------------------------------------------------ PathWord

PathWord PathWord::repeated(int n) const {
    if (n < 1) throw std::invalid_argument("repetition count must be at least 1");
    std::vector<Step> out;
    out.reserve(steps_.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.insert(out.end(), steps_.begin(), steps_.end());
    return PathWord(std::move(out));
}

PathWord PathWord::reversed() const {
    std::vector<Step> out(steps_.rbegin(), steps_.rend());
    for (Step& s : out) {
        if (s.kind == StepKind::forward)
            s.kind = StepKind::backward;
        else if (s.kind == StepKind::backward)
            s.kind = StepKind::forward;
    }
    return PathWord(std::move(out));
}

PathWord PathWord::rotated(std::size_t k) const {
    if (steps_.empty()) return *this;
    std::vector<Step> out = steps_;
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
    return PathWord(std::move(out));
}

int PathWord::inversion_count() const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(),
                                          [](const Step& s) { return s.kind == StepKind::inversion; }));
}

// -------------------------------------------------------------- validation

namespace {

std::string step_label(const FatGraph& g, std::size_t i, Step s) {
    return "step " + std::to_string(i + 1) + " (" + g.name(s.edge) + ")";
}

void check_edges(const FatGraph& g, std::span<const Step> steps) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step s = steps[i];
        if (index(s.edge) >= g.edge_count()) throw WordError("step " + std::to_string(i + 1) + ": unknown edge");
        if (s.kind == StepKind::inversion && !g.is_pending(s.edge))
            throw WordError(step_label(g, i, s) + ": inversion on an inner edge");
    }
}

void check_join(const FatGraph& g, std::span<const Step> steps, std::size_t i, std::size_t j) {
    const HalfEdge arr = arriving(steps[i]);
    const HalfEdge lv = leaving(steps[j]);
    if (g.at_dot(arr)) throw WordError(step_label(g, i, steps[i]) + ": runs into a dot-vertex without inversion");
    if (g.at_dot(lv)) throw WordError(step_label(g, j, steps[j]) + ": starts at a dot-vertex without inversion");
    if (g.vertex_of(arr) != g.vertex_of(lv))
        throw WordError(step_label(g, j, steps[j]) + ": not incident to the previous step");
    if (arr == lv) throw WordError(step_label(g, j, steps[j]) + ": backtracks");
}

Turn turn_between(const FatGraph& g, HalfEdge arr, HalfEdge lv) {
    return g.slot_of(lv) == (g.slot_of(arr) + 1) % 3 ? Turn::right : Turn::left;
}

void validate_open(const FatGraph& g, std::span<const Step> steps) {
    check_edges(g, steps);
    if (steps.size() < 2) throw WordError("an open arc needs at least two steps");
    const Step first = steps.front();
    const Step last = steps.back();
    if (!g.is_pending(first.edge) || first.kind != StepKind::backward)
        throw WordError("an open arc must leave a dot-vertex along its pending edge");
    if (!g.is_pending(last.edge) || last.kind != StepKind::forward)
        throw WordError("an open arc must end at a dot-vertex along its pending edge");
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) check_join(g, steps, i, i + 1);
}

}  // namespace

bool is_dot_loop(const FatGraph& g, const PathWord& w) {
    return w.size() == 1 && w.steps()[0].kind == StepKind::inversion && index(w.steps()[0].edge) < g.edge_count() &&
           g.is_pending(w.steps()[0].edge);
}

void validate(const FatGraph& g, const PathWord& w) {
    const auto steps = w.steps();
    check_edges(g, steps);
    if (is_dot_loop(g, w)) return;
    for (std::size_t i = 0; i < steps.size(); ++i) check_join(g, steps, i, (i + 1) % steps.size());
}

std::vector<Turn> turns(const FatGraph& g, const PathWord& w) {
    validate(g, w);
    std::vector<Turn> out;
    if (is_dot_loop(g, w)) return out;
    const auto steps = w.steps();
    for (std::size_t i = 0; i < steps.size(); ++i)
        out.push_back(turn_between(g, arriving(steps[i]), leaving(steps[(i + 1) % steps.size()])));
    return out;
}

bool is_graph_simple(const FatGraph& g, const PathWord& w) {
    std::vector<int> seen(g.edge_count(), 0);
    for (const Step& s : w.steps())
        if (++seen[index(s.edge)] > 1) return false;
    return true;
}

// ------------------------------------------------------------ matrix words

MatrixWord matrix_word(const FatGraph& g, const PathWord& w) {
    const auto t = turns(g, w);
    MatrixWord out;
    const auto steps = w.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step s = steps[i];
        out.push_back({FactorKind::shear, s.edge});
        if (s.kind == StepKind::inversion) {
            out.push_back({FactorKind::inversion, {}});
            out.push_back({FactorKind::shear, s.edge});
        }
        if (i < t.size()) out.push_back({t[i] == Turn::left ? FactorKind::left : FactorKind::right, {}});
    }
    return out;
}

namespace {

struct Token {
    EdgeId edge;
    char dir;
    char turn;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<Token> tokenize(const FatGraph& g, std::string_view text) {
    std::vector<Token> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    int n = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = trim(text.substr(pos, comma - pos));
        ++n;
        const std::string where = "token " + std::to_string(n) + " '" + std::string(tok) + "'";
        const std::size_t c1 = tok.find(':');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : tok.find(':', c1 + 1);
        if (c2 == std::string_view::npos || tok.find(':', c2 + 1) != std::string_view::npos)
            throw WordError(where + ": expected edge:dir:turn");
        const std::string_view name = trim(tok.substr(0, c1));
        const std::string_view dir = trim(tok.substr(c1 + 1, c2 - c1 - 1));
        const std::string_view turn = trim(tok.substr(c2 + 1));
        const auto e = g.find(name);
        if (!e) throw WordError(where + ": unknown edge");
        if (dir != "+" && dir != "-") throw WordError(where + ": direction must be + or -");
        if (turn.size() != 1 || std::string_view("LRF!").find(turn[0]) == std::string_view::npos)
            throw WordError(where + ": turn must be one of L R F !");
        out.push_back({*e, dir[0], turn[0]});
        pos = comma + 1;
    }
    return out;
}

}  // namespace

MatrixWord parse_matrix_word(const FatGraph& g, std::string_view text) {
    MatrixWord out;
    for (const Token& t : tokenize(g, text)) {
        out.push_back({FactorKind::shear, t.edge});
        switch (t.turn) {
            case 'L': out.push_back({FactorKind::left, {}}); break;
            case 'R': out.push_back({FactorKind::right, {}}); break;
            case 'F': out.push_back({FactorKind::inversion, {}}); break;
            default: break;
        }
    }
    return out;
}

PathWord parse_path_word(const FatGraph& g, std::string_view text) {
    const auto toks = tokenize(g, text);
    std::vector<Step> steps;
    std::vector<char> declared;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        const std::string where = "token " + std::to_string(i + 1);
        if (t.turn == 'F') {
            if (t.dir != '+') throw WordError(where + ": an inversion visit starts in direction +");
            if (i + 1 == toks.size() || toks[i + 1].edge != t.edge || toks[i + 1].dir != '-' ||
                toks[i + 1].turn == 'F')
                throw WordError(where + ": an inversion must be followed by the same edge in direction -");
            steps.push_back({t.edge, StepKind::inversion});
            declared.push_back(toks[i + 1].turn);
            ++i;
        } else {
            steps.push_back({t.edge, t.dir == '+' ? StepKind::forward : StepKind::backward});
            declared.push_back(t.turn);
        }
    }
    PathWord w(std::move(steps));
    if (is_dot_loop(g, w)) {
        if (declared[0] != '!') throw WordError("a dot loop takes no turn; write '!'");
        return w;
    }
    const auto actual = turns(g, w);
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const char expect = actual[i] == Turn::left ? 'L' : 'R';
        if (declared[i] != expect)
            throw WordError("step " + std::to_string(i + 1) + ": declared turn " + std::string(1, declared[i]) +
                            " but the graph turns " + std::string(1, expect));
    }
    return w;
}

std::string format_word(const FatGraph& g, const PathWord& w) {
    const auto t = turns(g, w);
    std::string out;
    const auto steps = w.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!out.empty()) out += ',';
        const std::string turn = i < t.size() ? (t[i] == Turn::left ? "L" : "R") : "!";
        const std::string& name = g.name(steps[i].edge);
        switch (steps[i].kind) {
            case StepKind::forward: out += name + ":+:" + turn; break;
            case StepKind::backward: out += name + ":-:" + turn; break;
            case StepKind::inversion: out += name + ":+:F," + name + ":-:" + turn; break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- products

namespace {

// P <- M P for one factor; shear(e, sign, x) returns e^{sign*Z_e/2} x.
template <class T, class Shear>
void apply(Mat2<T>& p, const Factor& f, Shear&& shear) {
    Mat2<T> r = p;
    switch (f.kind) {
        case FactorKind::shear:
            r(0, 0) = -shear(f.edge, 1, p(1, 0));
            r(0, 1) = -shear(f.edge, 1, p(1, 1));
            r(1, 0) = shear(f.edge, -1, p(0, 0));
            r(1, 1) = shear(f.edge, -1, p(0, 1));
            break;
        case FactorKind::left:
            r(0, 0) = p(1, 0);
            r(0, 1) = p(1, 1);
            r(1, 0) = -p(0, 0) - p(1, 0);
            r(1, 1) = -p(0, 1) - p(1, 1);
            break;
        case FactorKind::right:
            r(0, 0) = p(0, 0) + p(1, 0);
            r(0, 1) = p(0, 1) + p(1, 1);
            r(1, 0) = -p(0, 0);
            r(1, 1) = -p(0, 1);
            break;
        case FactorKind::inversion:
            r(0, 0) = p(1, 0);
            r(0, 1) = p(1, 1);
            r(1, 0) = -p(0, 0);
            r(1, 1) = -p(0, 1);
            break;
    }
    p = std::move(r);
}

template <class T>
Mat2<T> mul(const Mat2<T>& a, const Mat2<T>& b) {
    Mat2<T> r = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

LaurentElem laurent_shear(EdgeId e, int sign, const LaurentElem& x) {
    return LaurentElem::monomial(ExpVector::unit(e, HalfInt::from_units(sign))) * x;
}

template <class Coeff>
bool top_is_negative(const std::map<ExpVector, Coeff>& terms);

template <>
bool top_is_negative(const std::map<ExpVector, BigInt>& terms) {
    return !terms.empty() && terms.rbegin()->second < 0;
}

Mat2<LaurentElem> laurent_identity() { return {{LaurentElem(1), LaurentElem(0), LaurentElem(0), LaurentElem(1)}}; }

}  // namespace

Mat2<LaurentElem> holonomy_matrix(const MatrixWord& w) {
    Mat2<LaurentElem> p = laurent_identity();
    for (const Factor& f : w) apply(p, f, laurent_shear);
    return p;
}

Mat2<double> numeric_matrix(const MatrixWord& w, const Assignment& at) {
    std::vector<EdgeId> missing;
    for (const Factor& f : w)
        if (f.kind == FactorKind::shear && !at.has(f.edge) &&
            std::find(missing.begin(), missing.end(), f.edge) == missing.end())
            missing.push_back(f.edge);
    if (!missing.empty()) throw AssignmentError(missing);
    Mat2<double> p{{1.0, 0.0, 0.0, 1.0}};
    for (const Factor& f : w)
        apply(p, f, [&](EdgeId e, int sign, double x) { return std::exp(sign * at.at(e) / 2.0) * x; });
    return p;
}

LaurentElem literal_trace(const MatrixWord& w) {
    const auto p = holonomy_matrix(w);
    LaurentElem tr = p(0, 0) + p(1, 1);
    if (top_is_negative(tr.terms())) tr = -tr;
    return tr;
}

LaurentElem holonomy_trace(const FatGraph& g, const PathWord& w) { return literal_trace(matrix_word(g, w)); }

double numeric_trace(const MatrixWord& w, const Assignment& at) {
    const auto p = numeric_matrix(w, at);
    return std::abs(p(0, 0) + p(1, 1));
}

double numeric_trace(const FatGraph& g, const PathWord& w, const Assignment& at) {
    return numeric_trace(matrix_word(g, w), at);
}

TorusContext torus_context(const FatGraph& g) { return std::make_shared<const PoissonMatrix>(wp_matrix(g)); }

TorusElem quantum_trace(const FatGraph& g, const PathWord& w, const TorusContext& ctx) {
    if (!ctx || ctx->size() != g.edge_count()) throw ContextError("torus context does not match the graph");
    MatrixWord factors = matrix_word(g, w);

    // Start the product at the inversion of the first pending edge visited exactly once.
    std::vector<int> visits(g.edge_count(), 0);
    for (const Step& s : w.steps()) ++visits[index(s.edge)];
    std::size_t start = 0;
    std::size_t pos = 0;
    bool found = false;
    for (const Step& s : w.steps()) {
        if (s.kind == StepKind::inversion && visits[index(s.edge)] == 1) {
            start = pos + 1;
            found = true;
            break;
        }
        pos += s.kind == StepKind::inversion ? 3 : 1;
        if (!is_dot_loop(g, w)) ++pos;
    }
    if (found)
        std::rotate(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(start), factors.end());

    const TorusElem one(ctx, QCoeff(1));
    const TorusElem zero(ctx);
    Mat2<TorusElem> p{{one, zero, zero, one}};
    for (const Factor& f : factors)
        apply(p, f, [&](EdgeId e, int sign, const TorusElem& x) {
            return TorusElem::monomial(ctx, ExpVector::unit(e, HalfInt::from_units(sign))) * x;
        });
    TorusElem tr = p(0, 0) + p(1, 1);
    if (tr.is_zero()) return tr;
    const QCoeff& top = tr.terms().rbegin()->second;
    if (const auto k = top.single_power()) tr = tr.q_shifted(-*k);
    if (tr.terms().rbegin()->second.at_one() < 0) tr = -tr;
    return tr;
}

LaurentElem chebyshev_trace(const LaurentElem& value, int n) {
    if (n < 0) throw std::invalid_argument("Chebyshev index must be nonnegative");
    LaurentElem prev(2);
    LaurentElem cur = value;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        LaurentElem next = value * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentElem power_trace(const FatGraph& g, const PathWord& w, int n) {
    if (n < 1) throw std::invalid_argument("power must be at least 1");
    Mat2<LaurentElem> p = holonomy_matrix(matrix_word(g, w));
    if (top_is_negative((p(0, 0) + p(1, 1)).terms()))
        for (auto& x : p.a) x = -x;
    Mat2<LaurentElem> r = p;
    for (int k = 1; k < n; ++k) r = mul(r, p);
    return r(0, 0) + r(1, 1);
}

double proper_length(double value) {
    if (!(value >= 2.0)) throw NonHyperbolicError("trace " + std::to_string(value) + " is below 2");
    if (value == 2.0) return 0.0;
    return 2.0 * std::acosh(value / 2.0);
}

// --------------------------------------------------------------- crossings

namespace {

// Directed edge traversals of a closed word; an inversion passes through its dot.
std::vector<HalfEdge> traversals(const PathWord& w) {
    std::vector<HalfEdge> out;
    for (const Step& s : w.steps()) {
        out.push_back(leaving(s));
        if (s.kind == StepKind::inversion) out.push_back(half_edge(s.edge, 1));
    }
    return out;
}

std::vector<HalfEdge> reversed_traversals(std::vector<HalfEdge> t) {
    std::reverse(t.begin(), t.end());
    for (HalfEdge& h : t) h = partner(h);
    return t;
}

// Scans maximal common runs of two cyclic traversal sequences for a side change.
bool runs_cross(const FatGraph& g, const std::vector<HalfEdge>& a, const std::vector<HalfEdge>& b, bool same) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0 || m == 0) return false;
    const std::size_t cap = std::lcm(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (same && i == j) continue;
            if (a[i] != b[j]) continue;
            const std::size_t ip = (i + n - 1) % n;
            const std::size_t jp = (j + m - 1) % m;
            if (a[ip] == b[jp]) continue;
            std::size_t len = 1;
            while (len < cap && a[(i + len) % n] == b[(j + len) % m]) ++len;
            if (len == cap) continue;  // parallel copies
            const HalfEdge dep = a[i];
            const bool start_side = dep == g.next_at_vertex(partner(a[ip]));
            const HalfEdge arr = partner(a[(i + len - 1) % n]);
            const bool end_side = a[(i + len) % n] == g.next_at_vertex(arr);
            if (start_side != end_side) return true;
        }
    return false;
}

}  // namespace

bool curves_cross(const FatGraph& g, const PathWord& a, const PathWord& b) {
    validate(g, a);
    validate(g, b);
    const auto ta = traversals(a);
    const auto tb = traversals(b);
    const bool same = a == b;
    return runs_cross(g, ta, tb, same) || runs_cross(g, ta, reversed_traversals(tb), false);
}

bool self_crosses(const FatGraph& g, const PathWord& a) { return curves_cross(g, a, a); }

// -------------------------------------------------------------- multicurves

namespace {

struct Endpoint {
    std::size_t arc;
    bool at_start;
};

MulticurveReport invalid(std::string reason) {
    MulticurveReport r;
    r.status = MulticurveStatus::invalid;
    r.reason = std::move(reason);
    return r;
}

// Turns a concatenation of open arcs into a closed word by fusing each dot visit.
PathWord fuse(const std::vector<Step>& raw) {
    std::vector<Step> out;
    for (const Step& s : raw) {
        if (s.kind == StepKind::backward && !out.empty() && out.back().kind == StepKind::forward &&
            out.back().edge == s.edge) {
            out.back().kind = StepKind::inversion;
            continue;
        }
        out.push_back(s);
    }
    if (out.size() >= 2 && out.back().kind == StepKind::forward && out.front().kind == StepKind::backward &&
        out.back().edge == out.front().edge) {
        out.back().kind = StepKind::inversion;
        out.erase(out.begin());
    }
    return PathWord(std::move(out));
}

LaurentElem power(const LaurentElem& x, int n) {
    LaurentElem r(1);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

}  // namespace

MulticurveReport multicurve_check(const FatGraph& g, const Multicurve& m) {
    std::vector<CurveComponent> closed;
    std::vector<std::size_t> arcs;
    const auto& comps = m.components;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::string where = "component " + std::to_string(c + 1) + ": ";
        if (comps[c].weight < 1) return invalid(where + "weight must be positive");
        try {
            if (comps[c].closed) {
                validate(g, comps[c].word);
                closed.push_back(comps[c]);
            } else {
                validate_open(g, comps[c].word.steps());
                arcs.push_back(c);
            }
        } catch (const WordError& e) {
            return invalid(where + e.what());
        }
    }

    // Parity and pairing of arc endpoints at each window.
    std::map<EdgeId, std::vector<Endpoint>> windows;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        const auto steps = comps[arcs[k]].word.steps();
        windows[steps.front().edge].push_back({k, true});
        windows[steps.back().edge].push_back({k, false});
    }
    std::map<std::pair<std::size_t, bool>, Endpoint> mate;
    for (const auto& [e, ends] : windows) {
        long count = 0;
        for (const Endpoint& p : ends) count += comps[arcs[p.arc]].weight;
        if (count % 2 != 0) return invalid("odd number of endpoints at window " + g.name(e));
        if (ends.size() % 2 != 0) return invalid("unpaired strand at window " + g.name(e));
        for (std::size_t i = 0; i < ends.size(); i += 2) {
            const Endpoint x = ends[i];
            const Endpoint y = ends[i + 1];
            if (comps[arcs[x.arc]].weight != comps[arcs[y.arc]].weight)
                return invalid("strands of different weight meet at window " + g.name(e));
            mate[{x.arc, x.at_start}] = y;
            mate[{y.arc, y.at_start}] = x;
        }
    }

    std::vector<bool> used(arcs.size(), false);
    for (std::size_t k0 = 0; k0 < arcs.size(); ++k0) {
        if (used[k0]) continue;
        std::vector<Step> raw;
        std::size_t k = k0;
        bool forward = true;
        while (!used[k]) {
            used[k] = true;
            const PathWord& w = comps[arcs[k]].word;
            const PathWord piece = forward ? w : w.reversed();
            raw.insert(raw.end(), piece.steps().begin(), piece.steps().end());
            const Endpoint next = mate.at({k, !forward});
            k = next.arc;
            forward = next.at_start;
        }
        if (k != k0 || !forward) return invalid("strands at windows do not close up consistently");
        CurveComponent joined{fuse(raw), comps[arcs[k0]].weight, true};
        try {
            validate(g, joined.word);
        } catch (const WordError& e) {
            return invalid(std::string("joined arcs do not form a closed path: ") + e.what());
        }
        closed.push_back(std::move(joined));
    }

    for (std::size_t i = 0; i < closed.size(); ++i) {
        if (self_crosses(g, closed[i].word))
            return invalid("component " + format_word(g, closed[i].word) + " crosses itself");
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (curves_cross(g, closed[i].word, closed[j].word))
                return invalid("components " + format_word(g, closed[i].word) + " and " +
                               format_word(g, closed[j].word) + " intersect");
    }

    MulticurveReport rep;
    rep.closed_components = closed;
    for (const CurveComponent& c : closed)
        if (is_dot_loop(g, c.word)) {
            rep.status = MulticurveStatus::vanishing;
            rep.reason = "loop around the dot-vertex of " + g.name(c.word.steps()[0].edge);
            rep.function = LaurentElem(0);
            return rep;
        }
    rep.function = LaurentElem(1);
    for (const CurveComponent& c : closed) rep.function = rep.function * power(holonomy_trace(g, c.word), c.weight);
    return rep;
}

double multicurve_length(const FatGraph& g, const Multicurve& m, const Assignment& at) {
    const auto rep = multicurve_check(g, m);
    if (rep.status != MulticurveStatus::valid) throw WordError("multicurve is not valid: " + rep.reason);
    double total = 0;
    for (const CurveComponent& c : rep.closed_components)
        total += c.weight * proper_length(numeric_trace(g, c.word, at));
    return total;
}

PathWord lift_to_double(const FatGraph& g, const DoubledGraph& d, const PathWord& w, int copy) {
    if (copy != 0 && copy != 1) throw std::invalid_argument("copy must be 0 or 1");
    validate(g, w);
    const int passes = w.inversion_count() % 2 == 0 ? 1 : 2;
    std::vector<Step> out;
    for (int pass = 0; pass < passes; ++pass)
        for (const Step& s : w.steps()) {
            const std::size_t e = index(s.edge);
            if (s.kind == StepKind::inversion) {
                // The glued edge runs from copy 0 (end 0) to copy 1 (end 1).
                out.push_back({d.first[e], copy == 0 ? StepKind::forward : StepKind::backward});
                copy = 1 - copy;
            } else {
                out.push_back({copy == 0 ? d.first[e] : d.second[e], s.kind});
            }
        }
    PathWord lifted(std::move(out));
    validate(d.graph, lifted);
    return lifted;
}

}  // namespace bordered
