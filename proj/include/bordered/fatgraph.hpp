#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bordered/ring.hpp"

namespace bordered {

enum class VertexId : std::uint32_t {};
// Half-edge 2e is end 0 of edge e, 2e+1 is end 1. End 1 of a pending edge sits at its dot-vertex.
enum class HalfEdge : std::uint32_t {};

constexpr std::size_t index(VertexId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index(HalfEdge h) { return static_cast<std::size_t>(h); }
constexpr HalfEdge half_edge(EdgeId e, int end) { return static_cast<HalfEdge>(2 * index(e) + end); }
constexpr EdgeId edge_of(HalfEdge h) { return edge_id(index(h) / 2); }
constexpr int end_of(HalfEdge h) { return static_cast<int>(index(h) % 2); }
constexpr HalfEdge partner(HalfEdge h) { return static_cast<HalfEdge>(index(h) ^ 1U); }

enum class EdgeKind { inner, pending };

struct SlotRef {
    std::string vertex;
    int slot = 0;
};

struct EdgeSpec {
    std::string name;
    EdgeKind kind = EdgeKind::inner;
    SlotRef first;
    SlotRef second;  // unused for pending edges
    int line = 0;    // source line for diagnostics, 0 when built in code
};

class GraphError : public std::runtime_error {
public:
    GraphError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Trivalent ribbon graph with pending edges ending at explicit dot-vertices.
class FatGraph {
public:
    static FatGraph build(const std::vector<EdgeSpec>& specs);
    static FatGraph parse(std::string_view text);
    std::string to_text() const;

    std::size_t edge_count() const { return names_.size(); }
    std::size_t vertex_count() const { return slots_.size(); }
    std::size_t dot_count() const;

    const std::string& name(EdgeId e) const { return names_[index(e)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<EdgeId> find(std::string_view name) const;
    EdgeId edge(std::string_view name) const;
    EdgeKind kind(EdgeId e) const { return kinds_[index(e)]; }
    bool is_pending(EdgeId e) const { return kind(e) == EdgeKind::pending; }
    std::vector<EdgeId> edges() const;

    const std::string& vertex_label(VertexId v) const { return vertex_labels_[index(v)]; }
    bool at_dot(HalfEdge h) const { return is_pending(edge_of(h)) && end_of(h) == 1; }
    VertexId vertex_of(HalfEdge h) const;
    int slot_of(HalfEdge h) const;
    HalfEdge at(VertexId v, int slot) const { return slots_[index(v)][static_cast<std::size_t>(slot)]; }
    // Cyclic successor around the vertex; a dot half-edge is its own successor.
    HalfEdge next_at_vertex(HalfEdge h) const;
    HalfEdge prev_at_vertex(HalfEdge h) const;

    std::vector<EdgeSpec> specs() const;

private:
    std::vector<std::string> names_;
    std::vector<EdgeKind> kinds_;
    std::vector<std::string> vertex_labels_;
    std::vector<std::array<HalfEdge, 3>> slots_;
    // Per half-edge: owning vertex and slot; dot half-edges hold no vertex.
    std::vector<std::optional<std::pair<VertexId, int>>> location_;
};

struct Face {
    // Half-edges along which the boundary walk leaves a vertex, in order.
    std::vector<HalfEdge> sides;
};

std::vector<Face> trace_faces(const FatGraph& g);
// Coordinate sum around a face; pending edges appear twice.
ExpVector face_sum(const Face& f);
// Number of dot-vertices met by the face.
int windows_on(const FatGraph& g, const Face& f);

struct SurfaceSignature {
    int genus = 0;
    std::vector<int> delta;  // marked points per boundary component

    int holes() const { return static_cast<int>(delta.size()); }
    int marked_points() const;
    bool is_hyperbolic() const;
    int expected_edge_count() const;
    friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

SurfaceSignature signature(const FatGraph& g);

struct DoubledSignature {
    int genus = 0;
    int holes = 0;
    bool degenerate = false;  // no marked points: the double is two disjoint copies
};

DoubledSignature double_signature(const SurfaceSignature& sig);

enum class StandardKind { a_series, d_series, annulus_one_marked };

FatGraph standard_graph(StandardKind kind, int n = 0);

struct DoubledGraph {
    FatGraph graph;
    // For each original edge: its image in the first copy and in the second copy.
    // A pending edge maps to the single glued edge in both slots.
    std::vector<EdgeId> first;
    std::vector<EdgeId> second;
};

DoubledGraph double_graph(const FatGraph& g);
// Coordinates on the double: copies of inner coordinates, 2Z on glued edges.
Assignment doubled_coordinates(const FatGraph& g, const DoubledGraph& d, const Assignment& at);

}  // namespace bordered
