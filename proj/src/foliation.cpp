#include "bordered/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bordered {

mpq_class FreewayMeasure::short_branch(const FatGraph& g, VertexId v, int slot) const {
    const auto mu = [&](int s) { return long_branch.at(index(edge_of(g.at(v, s % 3)))); };
    mpq_class r = (mu(slot) + mu(slot + 1) - mu(slot + 2)) / 2;
    r.canonicalize();
    return r;
}

FreewayMeasure measure_of(const FatGraph& g, const PathWord& w, int weight) {
    FreewayMeasure m{std::vector<mpq_class>(g.edge_count(), 0)};
    for (const Step& s : w.steps()) m.long_branch[index(s.edge)] += (s.kind == StepKind::inversion ? 2 : 1) * weight;
    return m;
}

FreewayMeasure measure_of(const FatGraph& g, const Multicurve& mc) {
    FreewayMeasure m{std::vector<mpq_class>(g.edge_count(), 0)};
    for (const CurveComponent& c : mc.components) {
        const FreewayMeasure part = measure_of(g, c.word, c.weight);
        for (std::size_t e = 0; e < m.long_branch.size(); ++e) m.long_branch[e] += part.long_branch[e];
    }
    return m;
}

FreewayMeasure with_collar_weight(const FatGraph&, FreewayMeasure m, const Face& face, const mpq_class& weight) {
    for (HalfEdge h : face.sides) m.long_branch.at(index(edge_of(h))) += weight;
    return m;
}

FoliationShear shear_from_measure(const FreewayMeasure& m, const FatGraph& g) {
    if (m.long_branch.size() != g.edge_count()) throw std::invalid_argument("measure size does not match the graph");
    FoliationShear s{std::vector<mpq_class>(g.edge_count(), 0)};
    const auto mu = [&](HalfEdge h) { return m.long_branch[index(edge_of(h))]; };
    for (EdgeId e : g.edges()) {
        mpq_class sum = 0;
        const int ends = g.is_pending(e) ? 1 : 2;
        for (int end = 0; end < ends; ++end) {
            const HalfEdge h = half_edge(e, end);
            sum += mu(g.prev_at_vertex(h)) - mu(g.next_at_vertex(h));
        }
        mpq_class z = sum / 2;
        z.canonicalize();
        s.zeta[index(e)] = z;
    }
    return s;
}

std::vector<mpq_class> face_sums(const FatGraph& g, const FoliationShear& s) {
    std::vector<mpq_class> out;
    for (const Face& f : trace_faces(g)) {
        mpq_class sum = 0;
        for (HalfEdge h : f.sides) sum += s.at(edge_of(h));
        out.push_back(sum);
    }
    return out;
}

bool face_conditions_hold(const FatGraph& g, const FoliationShear& s) {
    const auto sums = face_sums(g, s);
    return std::all_of(sums.begin(), sums.end(), [](const mpq_class& x) { return x == 0; });
}

mpq_class tropical_phi(const mpq_class& x) { return x > 0 ? x : mpq_class(0); }

namespace {

TropicalFlip apply_tropical(FlipResult move, const FoliationShear& s) {
    if (s.zeta.size() != move.before.edge_count()) throw std::invalid_argument("shear size does not match the graph");
    FoliationShear r = s;
    const mpq_class z = s.at(move.edge);
    for (const ShiftTerm& t : move.shifts) r.zeta[index(t.target)] += t.sign * tropical_phi(t.scale * z);
    r.zeta[index(move.edge)] = -z;
    return {std::move(move), std::move(r)};
}

}  // namespace

TropicalFlip tropical_flip_inner(const FatGraph& g, const FoliationShear& s, EdgeId edge) {
    return apply_tropical(flip_inner(g, edge), s);
}

TropicalFlip tropical_flip_pending(const FatGraph& g, const FoliationShear& s, EdgeId edge) {
    return apply_tropical(flip_pending(g, edge), s);
}

TropicalFlip tropical_flip(const FatGraph& g, const FoliationShear& s, EdgeId edge) {
    return apply_tropical(flip(g, edge), s);
}

bool natural_under_flip(const FatGraph& g, const PathWord& w, EdgeId edge) {
    const FoliationShear before = shear_from_measure(measure_of(g, w), g);
    const TropicalFlip t = tropical_flip(g, before, edge);
    const PathWord moved = t.move.transport(w);
    return shear_from_measure(measure_of(t.move.after, moved), t.move.after) == t.shear;
}

LimitReport tropical_limit_check(double x, std::span<const double> lambdas) {
    if (!std::is_sorted(lambdas.begin(), lambdas.end()) ||
        std::adjacent_find(lambdas.begin(), lambdas.end()) != lambdas.end())
        throw std::invalid_argument("lambda values must increase");
    LimitReport r;
    r.x = x;
    for (double lambda : lambdas) {
        if (lambda <= 0) throw std::invalid_argument("lambda values must be positive");
        // phi(y) - max(y, 0) = log(1 + e^{-|y|}), evaluated without cancellation.
        const double excess = std::log1p(std::exp(-lambda * std::abs(x)));
        LimitSample s;
        s.lambda = lambda;
        s.scaled = std::max(x, 0.0) + excess / lambda;
        s.deviation = excess / lambda;
        s.bound = std::numbers::ln2 / lambda;
        if (s.deviation > s.bound) r.within_bound = false;
        if (!r.samples.empty() && s.deviation > r.samples.back().deviation) r.decreasing = false;
        r.samples.push_back(s);
    }
    return r;
}

FoliationShear parse_shear(const FatGraph& g, const std::string& text) {
    FoliationShear s{std::vector<mpq_class>(g.edge_count(), 0)};
    std::vector<bool> seen(g.edge_count(), false);
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
                   line.end());
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw GraphError(number, "expected edge=value");
        const auto e = g.find(line.substr(0, eq));
        if (!e) throw GraphError(number, "unknown edge '" + line.substr(0, eq) + "'");
        if (seen[index(*e)]) throw GraphError(number, "duplicate value for edge '" + g.name(*e) + "'");
        mpq_class v;
        if (v.set_str(line.substr(eq + 1), 10) != 0) throw GraphError(number, "value is not a rational number");
        v.canonicalize();
        if (v.get_den() == 0) throw GraphError(number, "zero denominator");
        s.zeta[index(*e)] = v;
        seen[index(*e)] = true;
    }
    return s;
}

std::string format_shear(const FatGraph& g, const FoliationShear& s) {
    std::string out;
    for (EdgeId e : g.edges()) out += g.name(e) + "=" + s.at(e).get_str() + "\n";
    return out;
}

}  // namespace bordered
