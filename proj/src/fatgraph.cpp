#include "bordered/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bordered {

namespace {

constexpr auto kUnset = static_cast<HalfEdge>(~0U);

int parse_slot(const std::string& tok, int line) {
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2')
        throw GraphError(line, "slot must be 0, 1 or 2, got '" + tok + "'");
    return tok[0] - '0';
}

}  // namespace

FatGraph FatGraph::build(const std::vector<EdgeSpec>& specs) {
    if (specs.empty()) throw GraphError(0, "graph has no edges");
    FatGraph g;
    std::map<std::string, VertexId, std::less<>> vertex_ids;
    std::vector<std::array<int, 3>> slot_lines;
    auto vertex = [&](const std::string& label) {
        auto [it, inserted] = vertex_ids.emplace(label, static_cast<VertexId>(g.slots_.size()));
        if (inserted) {
            g.vertex_labels_.push_back(label);
            g.slots_.push_back({kUnset, kUnset, kUnset});
            slot_lines.push_back({0, 0, 0});
        }
        return it->second;
    };

    g.location_.resize(2 * specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const EdgeSpec& s = specs[i];
        if (s.name.empty()) throw GraphError(s.line, "edge without a name");
        if (std::find(g.names_.begin(), g.names_.end(), s.name) != g.names_.end())
            throw GraphError(s.line, "duplicate edge name '" + s.name + "'");
        g.names_.push_back(s.name);
        g.kinds_.push_back(s.kind);
        const EdgeId e = edge_id(i);
        auto attach = [&](const SlotRef& ref, int end) {
            if (ref.slot < 0 || ref.slot > 2) throw GraphError(s.line, "slot out of range");
            const VertexId v = vertex(ref.vertex);
            auto& cell = g.slots_[index(v)][static_cast<std::size_t>(ref.slot)];
            if (cell != kUnset)
                throw GraphError(s.line, "duplicate slot " + std::to_string(ref.slot) + " at vertex '" +
                                             ref.vertex + "'");
            cell = half_edge(e, end);
            slot_lines[index(v)][static_cast<std::size_t>(ref.slot)] = s.line;
            g.location_[index(half_edge(e, end))] = std::make_pair(v, ref.slot);
        };
        attach(s.first, 0);
        if (s.kind == EdgeKind::inner) attach(s.second, 1);
    }

    for (std::size_t v = 0; v < g.slots_.size(); ++v)
        for (int k = 0; k < 3; ++k)
            if (g.slots_[v][static_cast<std::size_t>(k)] == kUnset) {
                const auto& lines = slot_lines[v];
                const int line = *std::max_element(lines.begin(), lines.end());
                throw GraphError(line, "vertex '" + g.vertex_labels_[v] + "' has empty slot " +
                                           std::to_string(k) + " (valence must be 3)");
            }

    std::vector<std::size_t> parent(g.slots_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < specs.size(); ++i)
        if (g.kinds_[i] == EdgeKind::inner) {
            const auto a = index(g.location_[2 * i]->first);
            const auto b = index(g.location_[2 * i + 1]->first);
            parent[find(a)] = find(b);
        }
    for (std::size_t v = 1; v < parent.size(); ++v)
        if (find(v) != find(0)) throw GraphError(0, "graph is disconnected");
    return g;
}

FatGraph FatGraph::parse(std::string_view text) {
    std::vector<EdgeSpec> specs;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        EdgeSpec s;
        s.line = line;
        if (tok[0] == "edge") {
            if (tok.size() != 6) throw GraphError(line, "expected: edge <name> <v1> <slot1> <v2> <slot2>");
            s.name = tok[1];
            s.kind = EdgeKind::inner;
            s.first = {tok[2], parse_slot(tok[3], line)};
            s.second = {tok[4], parse_slot(tok[5], line)};
        } else if (tok[0] == "pedge") {
            if (tok.size() != 4) throw GraphError(line, "expected: pedge <name> <v> <slot>");
            s.name = tok[1];
            s.kind = EdgeKind::pending;
            s.first = {tok[2], parse_slot(tok[3], line)};
        } else {
            throw GraphError(line, "unknown directive '" + tok[0] + "'");
        }
        specs.push_back(std::move(s));
    }
    return build(specs);
}

std::vector<EdgeSpec> FatGraph::specs() const {
    std::vector<EdgeSpec> out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        EdgeSpec s;
        s.name = names_[i];
        s.kind = kinds_[i];
        const auto& a = *location_[2 * i];
        s.first = {vertex_labels_[index(a.first)], a.second};
        if (s.kind == EdgeKind::inner) {
            const auto& b = *location_[2 * i + 1];
            s.second = {vertex_labels_[index(b.first)], b.second};
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string FatGraph::to_text() const {
    std::ostringstream out;
    for (const EdgeSpec& s : specs()) {
        if (s.kind == EdgeKind::inner)
            out << "edge " << s.name << ' ' << s.first.vertex << ' ' << s.first.slot << ' ' << s.second.vertex
                << ' ' << s.second.slot << '\n';
        else
            out << "pedge " << s.name << ' ' << s.first.vertex << ' ' << s.first.slot << '\n';
    }
    return out.str();
}

std::size_t FatGraph::dot_count() const {
    return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), EdgeKind::pending));
}

std::optional<EdgeId> FatGraph::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return edge_id(i);
    return std::nullopt;
}

EdgeId FatGraph::edge(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw GraphError(0, "unknown edge '" + std::string(name) + "'");
}

std::vector<EdgeId> FatGraph::edges() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(edge_id(i));
    return out;
}

VertexId FatGraph::vertex_of(HalfEdge h) const {
    const auto& loc = location_[index(h)];
    if (!loc) throw GraphError(0, "half-edge of '" + name(edge_of(h)) + "' ends at a dot-vertex");
    return loc->first;
}

int FatGraph::slot_of(HalfEdge h) const {
    const auto& loc = location_[index(h)];
    if (!loc) throw GraphError(0, "half-edge of '" + name(edge_of(h)) + "' ends at a dot-vertex");
    return loc->second;
}

HalfEdge FatGraph::next_at_vertex(HalfEdge h) const {
    if (at_dot(h)) return h;
    return at(vertex_of(h), (slot_of(h) + 1) % 3);
}

HalfEdge FatGraph::prev_at_vertex(HalfEdge h) const {
    if (at_dot(h)) return h;
    return at(vertex_of(h), (slot_of(h) + 2) % 3);
}

// -------------------------------------------------------------------- faces

std::vector<Face> trace_faces(const FatGraph& g) {
    const std::size_t n = 2 * g.edge_count();
    std::vector<bool> seen(n, false);
    std::vector<Face> faces;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        Face f;
        auto h = static_cast<HalfEdge>(start);
        while (!seen[index(h)]) {
            seen[index(h)] = true;
            f.sides.push_back(h);
            h = g.next_at_vertex(partner(h));
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

ExpVector face_sum(const Face& f) {
    std::vector<ExpVector::Entry> entries;
    for (HalfEdge h : f.sides) entries.emplace_back(edge_of(h), HalfInt(1));
    return ExpVector::from_entries(std::move(entries));
}

int windows_on(const FatGraph& g, const Face& f) {
    return static_cast<int>(std::count_if(f.sides.begin(), f.sides.end(),
                                          [&](HalfEdge h) { return g.at_dot(partner(h)); }));
}

int SurfaceSignature::marked_points() const { return std::accumulate(delta.begin(), delta.end(), 0); }

bool SurfaceSignature::is_hyperbolic() const {
    return holes() > 0 && 2 * genus - 2 + holes() + (marked_points() + 1) / 2 > 0;
}

int SurfaceSignature::expected_edge_count() const {
    return 6 * genus - 6 + 3 * holes() + 2 * marked_points();
}

SurfaceSignature signature(const FatGraph& g) {
    const auto faces = trace_faces(g);
    const auto vertices = static_cast<int>(g.vertex_count() + g.dot_count());
    const int euler = vertices - static_cast<int>(g.edge_count()) + static_cast<int>(faces.size());
    SurfaceSignature sig;
    sig.genus = (2 - euler) / 2;
    for (const Face& f : faces) sig.delta.push_back(windows_on(g, f));
    return sig;
}

DoubledSignature double_signature(const SurfaceSignature& sig) {
    const int odd = static_cast<int>(
        std::count_if(sig.delta.begin(), sig.delta.end(), [](int d) { return d % 2 != 0; }));
    DoubledSignature out;
    out.genus = 2 * sig.genus - 1 + (sig.marked_points() + odd) / 2;
    out.holes = 2 * sig.holes() - odd;
    out.degenerate = sig.marked_points() == 0;
    return out;
}

// ---------------------------------------------------------- standard graphs

FatGraph standard_graph(StandardKind kind, int n) {
    std::vector<EdgeSpec> specs;
    auto v = [](int i) { return "v" + std::to_string(i); };
    auto pend = [&](std::string name, int vert, int slot) {
        specs.push_back({std::move(name), EdgeKind::pending, {v(vert), slot}, {}, 0});
    };
    auto inner = [&](std::string name, int a, int sa, int b, int sb) {
        specs.push_back({std::move(name), EdgeKind::inner, {v(a), sa}, {v(b), sb}, 0});
    };
    switch (kind) {
        case StandardKind::a_series: {
            if (n < 3) throw std::invalid_argument("A_n graph needs n >= 3");
            pend("Z1", 2, 0);
            for (int i = 2; i < n; ++i) pend("Z" + std::to_string(i), i, 1);
            pend("Z" + std::to_string(n), n - 1, 2);
            for (int k = 2; k <= n - 2; ++k) inner("Y" + std::to_string(k), k, 2, k + 1, 0);
            break;
        }
        case StandardKind::d_series: {
            if (n < 2) throw std::invalid_argument("D_n graph needs n >= 2");
            for (int i = 1; i <= n; ++i) pend("Z" + std::to_string(i), i, 2);
            for (int i = 1; i <= n; ++i) inner("Y" + std::to_string(i), i, 0, i % n + 1, 1);
            break;
        }
        case StandardKind::annulus_one_marked: {
            pend("Z", 1, 0);
            inner("Y", 1, 1, 1, 2);
            break;
        }
    }
    return FatGraph::build(specs);
}

// ----------------------------------------------------------------- doubling

DoubledGraph double_graph(const FatGraph& g) {
    if (g.dot_count() == 0)
        throw GraphError(0, "graph has no pending edges: the double is two disjoint copies");
    std::vector<EdgeSpec> specs;
    std::vector<std::size_t> first(g.edge_count()), second(g.edge_count());
    auto a = [](const std::string& label) { return label; };
    auto b = [](const std::string& label) { return label + "'"; };
    for (const EdgeSpec& s : g.specs()) {
        if (s.kind != EdgeKind::inner) continue;
        const std::size_t i = index(g.edge(s.name));
        first[i] = specs.size();
        specs.push_back({s.name, EdgeKind::inner, {a(s.first.vertex), s.first.slot},
                         {a(s.second.vertex), s.second.slot}, 0});
        second[i] = specs.size();
        specs.push_back({s.name + "'", EdgeKind::inner, {b(s.first.vertex), s.first.slot},
                         {b(s.second.vertex), s.second.slot}, 0});
    }
    for (const EdgeSpec& s : g.specs()) {
        if (s.kind != EdgeKind::pending) continue;
        const std::size_t i = index(g.edge(s.name));
        first[i] = second[i] = specs.size();
        specs.push_back({s.name + "~", EdgeKind::inner, {a(s.first.vertex), s.first.slot},
                         {b(s.first.vertex), s.first.slot}, 0});
    }
    DoubledGraph d{FatGraph::build(specs), {}, {}};
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        d.first.push_back(edge_id(first[i]));
        d.second.push_back(edge_id(second[i]));
    }
    return d;
}

Assignment doubled_coordinates(const FatGraph& g, const DoubledGraph& d, const Assignment& at) {
    Assignment out(d.graph.edge_count());
    for (EdgeId e : g.edges()) {
        const double x = at.at(e);
        if (g.is_pending(e)) {
            out.set(d.first[index(e)], 2.0 * x);
        } else {
            out.set(d.first[index(e)], x);
            out.set(d.second[index(e)], x);
        }
    }
    return out;
}

}  // namespace bordered
