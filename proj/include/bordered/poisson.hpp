#pragma once

#include <vector>

#include "bordered/fatgraph.hpp"
#include "bordered/ring.hpp"

namespace bordered {

// Each trivalent vertex with cyclic slots (h0,h1,h2) adds {h_k, h_{k+1}} += 1.
PoissonMatrix wp_matrix(const FatGraph& g);

// {e^u, e^v} = ω(u,v) e^{u+v}, extended bilinearly.
LaurentElem bracket(const LaurentElem& f, const LaurentElem& g, const PoissonMatrix& pm);

struct CasimirReport {
    std::vector<ExpVector> face_sums;
    bool face_sums_central = false;
    std::size_t rank = 0;
    std::size_t corank = 0;
    std::size_t holes = 0;
    std::size_t face_span = 0;  // dimension spanned by the face sums

    bool ok() const { return face_sums_central && corank == holes && face_span == corank; }
};

CasimirReport casimir_check(const FatGraph& g);

}  // namespace bordered
