#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bordered/algebras.hpp"

namespace bordered {

struct RelationCheck {
    std::string name;
    bool holds = false;
    std::string detail;  // instance count when passing, first failing instance otherwise
};

bool all_hold(const std::vector<RelationCheck>& checks);

// Sequence of distinct indices that reads increasing (or decreasing) around the circle 1..n.
bool cyclically_increasing(const std::vector<int>& s);
bool cyclically_decreasing(const std::vector<int>& s);

// Brackets (classical) or q-commutators (quantum) of the A_n generators.
std::vector<RelationCheck> a_series_relations(int n, Regime regime);
// The eight D_n relation families, the stated and corrected loop-crossing case,
// and for n = 2 the two central elements.
std::vector<RelationCheck> d_series_relations(int n, Regime regime);
// Jacobi identity for commutators on every triple of quantum D_n generators.
RelationCheck d_series_jacobi(int n);
// Expansion of products of A_3 quantum generators into G_1232 and G_13.
std::vector<RelationCheck> product_expansions();

struct SamplingOptions {
    std::uint64_t seed = 1;
    int samples = 20;
    double tol = 1e-9;
};

// Braid relations, chain order, matrix forms; exact unless the regime is numeric.
std::vector<RelationCheck> braid_relations(AlgebraKind kind, Regime regime, int n);
// Coordinate-level braid relations and agreement with the generator action, sampled.
std::vector<RelationCheck> numeric_braid_relations(int n, const SamplingOptions& opt);
// D_n invariant matrices: covariance, cyclic shift, Pfaffian, rank of the loop product matrix.
std::vector<RelationCheck> invariant_relations(int n, Regime regime);

std::string format_point(const FatGraph& g, const std::vector<double>& point);

}  // namespace bordered
