#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "bordered/fatgraph.hpp"
#include "bordered/geodesic.hpp"
#include "bordered/moves.hpp"

namespace bordered {

// Transverse measure on the long branches, one per edge. Values may be negative.
struct FreewayMeasure {
    std::vector<mpq_class> long_branch;

    // Short branch at vertex v joining the ends in slots s and s+1, from the coupling equations.
    mpq_class short_branch(const FatGraph& g, VertexId v, int slot) const;
};

// Foliation-shear coordinate per edge.
struct FoliationShear {
    std::vector<mpq_class> zeta;

    const mpq_class& at(EdgeId e) const { return zeta.at(index(e)); }
    friend bool operator==(const FoliationShear&, const FoliationShear&) = default;
};

// Traversal counts of a multicurve; an inversion crosses the pending branch twice.
FreewayMeasure measure_of(const FatGraph& g, const Multicurve& m);
FreewayMeasure measure_of(const FatGraph& g, const PathWord& w, int weight = 1);
// Adds a boundary-parallel curve of the given weight around one face.
FreewayMeasure with_collar_weight(const FatGraph& g, FreewayMeasure m, const Face& face, const mpq_class& weight);

// Half the difference of the measures of the branches preceding and following each end of the edge;
// a pending edge has one end only.
FoliationShear shear_from_measure(const FreewayMeasure& m, const FatGraph& g);

// Sum of the coordinates around each face, pending edges counted twice.
std::vector<mpq_class> face_sums(const FatGraph& g, const FoliationShear& s);
bool face_conditions_hold(const FatGraph& g, const FoliationShear& s);

mpq_class tropical_phi(const mpq_class& x);

struct TropicalFlip {
    FlipResult move;
    FoliationShear shear;  // coordinates on move.after
};

// Piecewise-linear flip: each shift of the smooth flip with phi replaced by its tropical limit.
TropicalFlip tropical_flip_inner(const FatGraph& g, const FoliationShear& s, EdgeId edge);
TropicalFlip tropical_flip_pending(const FatGraph& g, const FoliationShear& s, EdgeId edge);
TropicalFlip tropical_flip(const FatGraph& g, const FoliationShear& s, EdgeId edge);

// Flipping then recomputing the coordinates of the transported word equals the tropical flip.
bool natural_under_flip(const FatGraph& g, const PathWord& w, EdgeId edge);

struct LimitSample {
    double lambda = 0;
    double scaled = 0;     // phi(lambda x) / lambda
    double deviation = 0;  // |phi(lambda x)/lambda - phi_H(x)|
    double bound = 0;      // log 2 / lambda
};

struct LimitReport {
    double x = 0;
    std::vector<LimitSample> samples;
    bool within_bound = true;  // every deviation at most log 2 / lambda
    bool decreasing = true;    // deviations non-increasing along increasing lambda
    bool ok() const { return within_bound && decreasing; }
};

LimitReport tropical_limit_check(double x, std::span<const double> lambdas);

// Reads "edge=value" lines; values are rationals such as -3/2 or integers. '#' starts a comment.
FoliationShear parse_shear(const FatGraph& g, const std::string& text);
std::string format_shear(const FatGraph& g, const FoliationShear& s);

}  // namespace bordered
