#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bordered/fatgraph.hpp"
#include "bordered/ring.hpp"

namespace bordered {

class WordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Turn { left, right };
// forward runs end 0 -> end 1; inversion goes up a pending edge, through the dot and back.
enum class StepKind { forward, backward, inversion };

struct Step {
    EdgeId edge{};
    StepKind kind = StepKind::forward;
    friend bool operator==(const Step&, const Step&) = default;
};

HalfEdge leaving(Step s);
HalfEdge arriving(Step s);

// Cyclic sequence of edge traversals; validity is checked against a graph.
class PathWord {
public:
    PathWord() = default;
    explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

    std::span<const Step> steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    PathWord repeated(int n) const;
    PathWord reversed() const;
    PathWord rotated(std::size_t k) const;
    int inversion_count() const;

    friend bool operator==(const PathWord&, const PathWord&) = default;

private:
    std::vector<Step> steps_;
};

// A single inversion step with no turn: the loop around one dot-vertex.
bool is_dot_loop(const FatGraph& g, const PathWord& w);
// Throws WordError when consecutive steps do not meet at a vertex or backtrack.
void validate(const FatGraph& g, const PathWord& w);
std::vector<Turn> turns(const FatGraph& g, const PathWord& w);
// Graph-simple: no inner edge twice, each pending edge inverted at most once.
bool is_graph_simple(const FatGraph& g, const PathWord& w);

enum class FactorKind { shear, left, right, inversion };

struct Factor {
    FactorKind kind = FactorKind::shear;
    EdgeId edge{};  // meaningful for shear factors only
    friend bool operator==(const Factor&, const Factor&) = default;
};

// Literal matrix word; the first factor acts first (rightmost in the product).
using MatrixWord = std::vector<Factor>;

MatrixWord matrix_word(const FatGraph& g, const PathWord& w);
// Text grammar: comma-separated edge:dir:turn, dir in {+,-}, turn in {L,R,F,!}.
// The step contributes X_edge, then L, R, the inversion F, or nothing for '!'.
MatrixWord parse_matrix_word(const FatGraph& g, std::string_view text);
// Same grammar, read as a graph path: "Z:+:F,Z:-:T" is one inversion visit.
PathWord parse_path_word(const FatGraph& g, std::string_view text);
std::string format_word(const FatGraph& g, const PathWord& w);

template <class T>
struct Mat2 {
    std::array<T, 4> a;  // row-major
    const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
    T& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
};

Mat2<LaurentElem> holonomy_matrix(const MatrixWord& w);
Mat2<double> numeric_matrix(const MatrixWord& w, const Assignment& at);
// Trace of the literal product, sign-normalized so the leading coefficient is positive.
LaurentElem literal_trace(const MatrixWord& w);
LaurentElem holonomy_trace(const FatGraph& g, const PathWord& w);
// |tr| of the numerically multiplied matrices.
double numeric_trace(const FatGraph& g, const PathWord& w, const Assignment& at);
double numeric_trace(const MatrixWord& w, const Assignment& at);

TorusContext torus_context(const FatGraph& g);
TorusElem quantum_trace(const FatGraph& g, const PathWord& w, const TorusContext& ctx);

// 2 T_n(x/2) applied to a classical geodesic function.
LaurentElem chebyshev_trace(const LaurentElem& value, int n);
LaurentElem power_trace(const FatGraph& g, const PathWord& w, int n);

class NonHyperbolicError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

double proper_length(double value);

// Lift of a closed word to the double, starting in copy 0 or 1. Each inversion crosses the glued
// edge into the other copy, so a word with an odd number of inversions closes after two passes.
PathWord lift_to_double(const FatGraph& g, const DoubledGraph& d, const PathWord& w, int copy);

struct CurveComponent {
    PathWord word;
    int weight = 1;
    bool closed = true;  // open components run from a dot-vertex to a dot-vertex
};

struct Multicurve {
    std::vector<CurveComponent> components;
};

enum class MulticurveStatus { valid, vanishing, invalid };

struct MulticurveReport {
    MulticurveStatus status = MulticurveStatus::valid;
    std::string reason;
    std::vector<CurveComponent> closed_components;  // after joining open ends at windows
    LaurentElem function;                          // product of G^weight when valid
};

MulticurveReport multicurve_check(const FatGraph& g, const Multicurve& m);
// True when two closed words cross somewhere (self-crossings when a and b coincide).
bool curves_cross(const FatGraph& g, const PathWord& a, const PathWord& b);
bool self_crosses(const FatGraph& g, const PathWord& a);
double multicurve_length(const FatGraph& g, const Multicurve& m, const Assignment& at);

}  // namespace bordered
