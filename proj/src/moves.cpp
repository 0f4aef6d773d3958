#include "bordered/moves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "bordered/poisson.hpp"

namespace bordered {

double phi(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

namespace {

using SlotTable = std::vector<std::array<HalfEdge, 3>>;

SlotTable slot_table(const FatGraph& g) {
    SlotTable t(g.vertex_count());
    for (std::size_t v = 0; v < t.size(); ++v)
        for (int s = 0; s < 3; ++s) t[v][static_cast<std::size_t>(s)] = g.at(static_cast<VertexId>(v), s);
    return t;
}

FatGraph rebuild(const FatGraph& g, const SlotTable& table) {
    std::vector<std::optional<SlotRef>> where(2 * g.edge_count());
    for (std::size_t v = 0; v < table.size(); ++v)
        for (int s = 0; s < 3; ++s)
            where[index(table[v][static_cast<std::size_t>(s)])] =
                SlotRef{g.vertex_label(static_cast<VertexId>(v)), s};
    auto specs = g.specs();
    for (std::size_t e = 0; e < specs.size(); ++e) {
        specs[e].first = *where[2 * e];
        if (specs[e].kind == EdgeKind::inner) specs[e].second = *where[2 * e + 1];
        specs[e].line = 0;
    }
    return FatGraph::build(specs);
}

std::array<HalfEdge, 3>& slots_of(SlotTable& t, VertexId v) { return t[index(v)]; }

std::string scaled_name(int scale, const std::string& name) {
    std::string s = scale < 0 ? "-" : "";
    if (std::abs(scale) != 1) s += std::to_string(std::abs(scale)) + "*";
    return s + name;
}

}  // namespace

FlipResult flip_inner(const FatGraph& g, EdgeId edge) {
    if (g.is_pending(edge)) throw WrongMoveError(g.name(edge) + " is a pending edge; use the pending flip");
    const HalfEdge h0 = half_edge(edge, 0);
    const HalfEdge h1 = half_edge(edge, 1);
    const VertexId u = g.vertex_of(h0);
    const VertexId v = g.vertex_of(h1);
    if (u == v) throw WrongMoveError(g.name(edge) + " has coinciding endpoints");
    const int ku = g.slot_of(h0);
    const int kv = g.slot_of(h1);
    const HalfEdge a = g.at(u, (ku + 1) % 3);
    const HalfEdge b = g.at(u, (ku + 2) % 3);
    const HalfEdge c = g.at(v, (kv + 1) % 3);
    const HalfEdge d = g.at(v, (kv + 2) % 3);

    SlotTable t = slot_table(g);
    slots_of(t, u) = {h0, b, c};
    slots_of(t, v) = {h1, d, a};

    FlipResult r;
    r.kind = MoveKind::inner;
    r.edge = edge;
    r.before = g;
    r.after = rebuild(g, t);
    r.shifts = {{edge_of(b), 1, 1}, {edge_of(d), 1, 1}, {edge_of(a), -1, -1}, {edge_of(c), -1, -1}};
    return r;
}

FlipResult flip_pending(const FatGraph& g, EdgeId edge) {
    if (!g.is_pending(edge)) throw WrongMoveError(g.name(edge) + " is an inner edge; use the inner flip");
    const HalfEdge h0 = half_edge(edge, 0);
    const VertexId v = g.vertex_of(h0);
    const int k = g.slot_of(h0);
    const HalfEdge next = g.at(v, (k + 1) % 3);
    const HalfEdge prev = g.at(v, (k + 2) % 3);

    SlotTable t = slot_table(g);
    auto& s = slots_of(t, v);
    s[static_cast<std::size_t>((k + 1) % 3)] = prev;
    s[static_cast<std::size_t>((k + 2) % 3)] = next;

    FlipResult r;
    r.kind = MoveKind::pending;
    r.edge = edge;
    r.before = g;
    r.after = rebuild(g, t);
    r.shifts = {{edge_of(next), -1, -2}, {edge_of(prev), 1, 2}};
    return r;
}

FlipResult flip(const FatGraph& g, EdgeId edge) {
    return g.is_pending(edge) ? flip_pending(g, edge) : flip_inner(g, edge);
}

Assignment FlipResult::apply(const Assignment& at) const {
    Assignment r = at;
    const double z = at.at(edge);
    for (const ShiftTerm& s : shifts) r.set(s.target, r.at(s.target) + s.sign * phi(s.scale * z));
    r.set(edge, -z);
    return r;
}

std::vector<std::string> FlipResult::describe() const {
    std::map<EdgeId, std::string> lines;
    const std::string& z = before.name(edge);
    for (const ShiftTerm& s : shifts) {
        const std::string& name = before.name(s.target);
        auto [it, fresh] = lines.emplace(s.target, name + "' = " + name);
        it->second += (s.sign > 0 ? " + " : " - ") + std::string("phi(") + scaled_name(s.scale, z) + ")";
    }
    lines[edge] = z + "' = -" + z;
    std::vector<std::string> out;
    for (auto& [e, line] : lines) out.push_back(std::move(line));
    return out;
}

PathWord FlipResult::transport(const PathWord& w) const {
    validate(before, w);
    const auto steps = w.steps();
    const auto is_flipped = [&](const Step& s) { return s.edge == edge; };
    const auto first = std::find_if_not(steps.begin(), steps.end(), is_flipped);
    if (first == steps.end()) return w;  // the loop around the flipped dot-vertex
    const std::size_t n = steps.size();
    const std::size_t i0 = static_cast<std::size_t>(first - steps.begin());
    const VertexId pivot = before.vertex_of(half_edge(edge, 0));

    std::vector<Step> out;
    std::size_t i = 0;
    while (i < n) {
        const Step s = steps[(i0 + i) % n];
        out.push_back(s);
        ++i;
        int visits = 0;
        while (i < n && is_flipped(steps[(i0 + i) % n])) {
            ++i;
            ++visits;
        }
        const Step next = steps[(i0 + i) % n];
        const HalfEdge arr = arriving(s);
        const HalfEdge lv = leaving(next);
        if (kind == MoveKind::inner) {
            const VertexId from = after.vertex_of(arr);
            if (from != after.vertex_of(lv)) {
                const bool forward = after.vertex_of(half_edge(edge, 0)) == from;
                out.push_back({edge, forward ? StepKind::forward : StepKind::backward});
            }
        } else {
            if (before.vertex_of(arr) == pivot && arr != lv) visits = 1 - visits;
            for (int k = 0; k < visits; ++k) out.push_back({edge, StepKind::inversion});
        }
    }
    PathWord result(std::move(out));
    try {
        validate(after, result);
    } catch (const WordError& e) {
        throw std::logic_error(std::string("transport produced an invalid word: ") + e.what());
    }
    return result;
}

PathWord transport_path(const PathWord& w, const FlipResult& fr) { return fr.transport(w); }

bool preserves_poisson(const FlipResult& fr) {
    const PoissonMatrix old_pm = wp_matrix(fr.before);
    const PoissonMatrix new_pm = wp_matrix(fr.after);
    const std::size_t n = fr.before.edge_count();
    // {Z'_a, Z'_b} = c0 + c1 * sigma(|k| Z), sigma the logistic derivative of phi.
    const auto sign_of = [&](EdgeId a) { return a == fr.edge ? -1 : 1; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const EdgeId a = edge_id(i);
            const EdgeId b = edge_id(j);
            long c0 = sign_of(a) * sign_of(b) * old_pm.at(a, b);
            long c1 = 0;
            const auto add = [&](long coeff, int scale) {
                if (scale > 0) {
                    c1 += coeff;
                } else {
                    c0 += coeff;
                    c1 -= coeff;
                }
            };
            for (const ShiftTerm& s : fr.shifts) {
                if (s.target == b) add(static_cast<long>(sign_of(a)) * s.sign * s.scale * old_pm.at(a, fr.edge), s.scale);
                if (s.target == a) add(static_cast<long>(sign_of(b)) * s.sign * s.scale * old_pm.at(fr.edge, b), s.scale);
            }
            if (c1 != 0 || c0 != new_pm.at(a, b)) return false;
        }
    return true;
}

// ------------------------------------------------------ pending-flip identities

namespace {

using Num = Mat2<double>;

Num times(const Num& a, const Num& b) {
    Num r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

Num shear(double z) { return Num{{0.0, -std::exp(z / 2), std::exp(-z / 2), 0.0}}; }

// Left-to-right product of a word over {X<var>, L, R, F}.
Num product(const std::string& word, const std::map<std::string, double>& vars) {
    Num p{{1.0, 0.0, 0.0, 1.0}};
    std::size_t pos = 0;
    while (pos < word.size()) {
        const std::size_t sp = std::min(word.find(' ', pos), word.size());
        const std::string tok = word.substr(pos, sp - pos);
        pos = sp + 1;
        if (tok.empty()) continue;
        Num m{};
        if (tok == "L")
            m = Num{{0.0, 1.0, -1.0, -1.0}};
        else if (tok == "R")
            m = Num{{1.0, 1.0, -1.0, 0.0}};
        else if (tok == "F")
            m = Num{{0.0, 1.0, -1.0, 0.0}};
        else
            m = shear(vars.at(tok.substr(2)));
        p = times(p, m);
    }
    return p;
}

double projective_residual(const Num& a, const Num& b) {
    double best = 1e300;
    for (double sign : {1.0, -1.0}) {
        double worst = 0;
        for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a.a[k] - sign * b.a[k]));
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace

std::vector<MatrixIdentity> pending_flip_identities(double y1, double y2, double z) {
    const std::map<std::string, double> vars{{"Y1", y1},
                                             {"Y2", y2},
                                             {"Z", z},
                                             {"Y1'", y1 - phi(-2 * z)},
                                             {"Y2'", y2 + phi(2 * z)},
                                             {"Z'", -z}};
    const std::vector<std::array<std::string, 3>> table{
        {"through the dot, left-left", "X_Y2 L X_Z F X_Z L X_Y1", "X_Y2' L X_Y1'"},
        {"return along Y1, stated form", "X_Y1 R X_Z F X_Z R X_Y1", "X_Y1' L X_Z' F X_Z' R X_Y1'"},
        {"return along Y1", "X_Y1 R X_Z F X_Z L X_Y1", "X_Y1' L X_Z' F X_Z' R X_Y1'"},
        {"past the dot", "X_Y2 R X_Y1", "X_Y2' R X_Z' F X_Z' R X_Y1'"},
        {"return along Y2", "X_Y2 L X_Z F X_Z R X_Y2", "X_Y2' R X_Z' F X_Z' L X_Y2'"},
    };
    std::vector<MatrixIdentity> out;
    for (const auto& [name, lhs, rhs] : table)
        out.push_back({name, lhs, rhs, projective_residual(product(lhs, vars), product(rhs, vars))});
    return out;
}

}  // namespace bordered
