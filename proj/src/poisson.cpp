#include "bordered/poisson.hpp"

namespace bordered {

PoissonMatrix wp_matrix(const FatGraph& g) {
    PoissonMatrix pm(g.edge_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (int k = 0; k < 3; ++k) {
            const HalfEdge a = g.at(static_cast<VertexId>(v), k);
            const HalfEdge b = g.at(static_cast<VertexId>(v), (k + 1) % 3);
            pm.add(edge_of(a), edge_of(b), 1);
        }
    return pm;
}

LaurentElem bracket(const LaurentElem& f, const LaurentElem& g, const PoissonMatrix& pm) {
    LaurentElem r;
    for (const auto& [u, c] : f.terms())
        for (const auto& [v, d] : g.terms()) {
            const QuarterInt w = pm.omega(u, v);
            if (w.is_zero()) continue;
            if (w.units() % 4 != 0) throw std::logic_error("bracket produced a fractional coefficient");
            r.add_term(u + v, c * d * BigInt(static_cast<long>(w.units() / 4)));
        }
    return r;
}

CasimirReport casimir_check(const FatGraph& g) {
    const PoissonMatrix pm = wp_matrix(g);
    CasimirReport rep;
    rep.rank = pm.rank();
    rep.corank = pm.size() - rep.rank;
    const auto faces = trace_faces(g);
    rep.holes = faces.size();
    rep.face_sums_central = true;
    std::vector<std::vector<mpq_class>> rows;
    for (const Face& f : faces) {
        ExpVector s = face_sum(f);
        rep.face_sums_central = rep.face_sums_central && pm.annihilates(s);
        std::vector<mpq_class> row(pm.size());
        for (const auto& [e, p] : s.entries()) row[index(e)] = mpq_class(p.units(), 2);
        rows.push_back(std::move(row));
        rep.face_sums.push_back(std::move(s));
    }
    rep.face_span = rational_rank(std::move(rows));
    return rep;
}

}  // namespace bordered
