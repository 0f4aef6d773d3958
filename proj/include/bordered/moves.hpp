#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bordered/fatgraph.hpp"
#include "bordered/geodesic.hpp"
#include "bordered/ring.hpp"

namespace bordered {

class WrongMoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class MoveKind { inner, pending };

// target += sign * f(scale * Z) with Z the old coordinate of the flipped edge;
// f is log(1+e^x) classically and max(x,0) tropically. Repeated targets add up.
struct ShiftTerm {
    EdgeId target{};
    int sign = 1;
    int scale = 1;
};

struct FlipResult {
    MoveKind kind = MoveKind::inner;
    EdgeId edge{};
    FatGraph before;
    FatGraph after;
    std::vector<ShiftTerm> shifts;  // the flipped edge itself is negated

    Assignment apply(const Assignment& at) const;
    // One line per changed coordinate, e.g. "Y1' = Y1 - phi(-2*Z)".
    std::vector<std::string> describe() const;
    PathWord transport(const PathWord& w) const;
};

double phi(double x);

FlipResult flip_inner(const FatGraph& g, EdgeId edge);
FlipResult flip_pending(const FatGraph& g, EdgeId edge);
FlipResult flip(const FatGraph& g, EdgeId edge);
PathWord transport_path(const PathWord& w, const FlipResult& fr);

// Exact check that the flip is a Poisson map onto the bracket of the new graph.
bool preserves_poisson(const FlipResult& fr);

// Matrix identities behind the pending flip, at coordinates (Y1, Y2, Z).
struct MatrixIdentity {
    std::string name;
    std::string lhs;
    std::string rhs;
    double residual = 0;  // projective: min over the sign of max |entry difference|
};

std::vector<MatrixIdentity> pending_flip_identities(double y1, double y2, double z);

}  // namespace bordered
