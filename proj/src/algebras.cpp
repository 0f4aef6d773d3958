#include "bordered/algebras.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bordered/moves.hpp"

namespace bordered {

int minimum_size(AlgebraKind kind) { return kind == AlgebraKind::a_series ? 3 : 2; }

FatGraph algebra_graph(AlgebraKind kind, int n) {
    return standard_graph(kind == AlgebraKind::a_series ? StandardKind::a_series : StandardKind::d_series, n);
}

namespace {

std::string zname(int i) { return "Z" + std::to_string(i); }
std::string yname(int i) { return "Y" + std::to_string(i); }

void check_size(AlgebraKind kind, int n) {
    if (n < minimum_size(kind)) throw std::invalid_argument("algebra size below the minimum");
}

}  // namespace

PathWord generator_word(AlgebraKind kind, int n, int i, int j) {
    check_size(kind, n);
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("generator index out of range");
    const FatGraph g = algebra_graph(kind, n);
    std::vector<Step> steps;
    const auto inv = [&](int k) { steps.push_back({g.edge(zname(k)), StepKind::inversion}); };
    const auto along = [&](int k, StepKind dir) { steps.push_back({g.edge(yname(k)), dir}); };
    if (kind == AlgebraKind::a_series) {
        if (i >= j) throw std::invalid_argument("A-series generators need i < j");
        const auto site = [&](int k) { return std::max(2, std::min(k, n - 1)); };
        inv(i);
        for (int k = site(i); k < site(j); ++k) along(k, StepKind::forward);
        inv(j);
        for (int k = site(j) - 1; k >= site(i); --k) along(k, StepKind::backward);
        return PathWord(std::move(steps));
    }
    inv(i);
    if (i == j) {
        for (int k = 0; k < n; ++k) along((i - 1 + k) % n + 1, StepKind::forward);
        return PathWord(std::move(steps));
    }
    std::vector<int> arc;
    for (int k = i; k != j; k = k % n + 1) arc.push_back(k);
    for (int k : arc) along(k, StepKind::forward);
    inv(j);
    for (auto it = arc.rbegin(); it != arc.rend(); ++it) along(*it, StepKind::backward);
    return PathWord(std::move(steps));
}

namespace {

template <class T, class Eval>
GeneratorMatrix<T> fill(AlgebraKind kind, int n, const T& zero, const T& diagonal, Eval&& eval) {
    GeneratorMatrix<T> m(kind, n, zero);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (kind == AlgebraKind::a_series) {
                if (i == j) m(i, j) = diagonal;
                if (i >= j) continue;
            }
            m(i, j) = eval(generator_word(kind, n, i, j));
        }
    return m;
}

}  // namespace

GeneratorMatrix<LaurentElem> classical_generators(AlgebraKind kind, int n) {
    check_size(kind, n);
    const FatGraph g = algebra_graph(kind, n);
    return fill(kind, n, LaurentElem(0), LaurentElem(1), [&](const PathWord& w) { return holonomy_trace(g, w); });
}

GeneratorMatrix<TorusElem> quantum_generators(AlgebraKind kind, int n) {
    check_size(kind, n);
    const FatGraph g = algebra_graph(kind, n);
    const TorusContext ctx = torus_context(g);
    const TorusElem diagonal(ctx, QCoeff::monomial(QuarterInt(-1)));
    return fill(kind, n, TorusElem(ctx), diagonal, [&](const PathWord& w) { return quantum_trace(g, w, ctx); });
}

GeneratorMatrix<double> numeric_generators(AlgebraKind kind, int n, const Assignment& at) {
    check_size(kind, n);
    const FatGraph g = algebra_graph(kind, n);
    return fill(kind, n, 0.0, 1.0, [&](const PathWord& w) { return numeric_trace(g, w, at); });
}

LaurentElem pfaffian(const GeneratorMatrix<LaurentElem>& m) {
    const int n = m.n();
    if (n % 2 != 0) return LaurentElem(0);
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
    // pf(A) = sum_j (-1)^{j} a_{1 j} pf(A without rows/cols 1, j), j counted from 0 after the first index.
    const auto rec = [&](const auto& self, const std::vector<int>& rows) -> LaurentElem {
        if (rows.empty()) return LaurentElem(1);
        LaurentElem total(0);
        for (std::size_t j = 1; j < rows.size(); ++j) {
            std::vector<int> rest;
            for (std::size_t k = 1; k < rows.size(); ++k)
                if (k != j) rest.push_back(rows[k]);
            LaurentElem term = m(rows[0], rows[j]) * self(self, rest);
            if (j % 2 == 0) term = -term;
            total += term;
        }
        return total;
    };
    return rec(rec, idx);
}

bool has_rank_at_most_one(const GeneratorMatrix<LaurentElem>& m) {
    const int n = m.n();
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l)
                    if (m(i, j) * m(k, l) != m(i, l) * m(k, j)) return false;
    return true;
}

Assignment braid_coordinates(int n, int i, const Assignment& at) {
    check_size(AlgebraKind::a_series, n);
    if (i < 1 || i >= n) throw std::out_of_range("braid index out of range");
    const FatGraph g = algebra_graph(AlgebraKind::a_series, n);
    // Chain edges: Y_1 is Z_1 and Y_{n-1} is Z_n.
    const auto chain = [&](int k) { return g.edge(k == 1 ? zname(1) : k == n - 1 ? zname(n) : yname(k)); };
    const auto z = [&](int k) { return g.edge(zname(k)); };
    Assignment r = at;
    if (i == 1) {
        const double z1 = at.at(z(1));
        const double z2 = at.at(z(2));
        r.set(z(1), z2 - phi(-2 * z1));
        r.set(z(2), -z1);
        r.set(chain(2), at.at(chain(2)) + phi(2 * z1));
        return r;
    }
    if (i == n - 1) {
        const double zm = at.at(z(n - 1));
        const double ze = at.at(z(n));
        r.set(z(n - 1), ze - phi(-2 * zm));
        r.set(z(n), -zm);
        r.set(chain(n - 2), at.at(chain(n - 2)) + phi(2 * zm));
        return r;
    }
    const double zi = at.at(z(i));
    const double zj = at.at(z(i + 1));
    const double y = at.at(chain(i));
    const double a = 1 + std::exp(2 * zi) * (1 + std::exp(y));
    const double b = 1 + std::exp(2 * zi) * std::pow(1 + std::exp(y), 2);
    r.set(chain(i - 1), at.at(chain(i - 1)) + std::log(a));
    r.set(chain(i), y - std::log(b));
    r.set(chain(i + 1), at.at(chain(i + 1)) + std::log(b / a));
    r.set(z(i), 2 * zi + zj + y - std::log(a));
    r.set(z(i + 1), -zi - y + std::log(a));
    return r;
}

std::vector<double> random_point(std::size_t size, std::uint64_t seed, int sample, double spread) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(sample)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(-spread, spread);
    std::vector<double> out(size);
    for (double& x : out) x = dist(rng);
    return out;
}

std::optional<ChainWitness> chain_power_counterexample(AlgebraKind kind, int n, std::uint64_t seed, int samples,
                                                       double tol) {
    const FatGraph g = algebra_graph(kind, n);
    for (int s = 0; s < samples; ++s) {
        const auto point = random_point(g.edge_count(), seed, s);
        const auto start = numeric_generators(kind, n, Assignment(point));
        auto cur = start;
        for (int k = 0; k < n; ++k) cur = apply_chain(cur);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (kind == AlgebraKind::a_series && i >= j) continue;
                const double before = start(i, j);
                const double after = cur(i, j);
                if (std::abs(after - before) > tol * std::max(1.0, std::abs(before)))
                    return ChainWitness{point, i, j, before, after};
            }
    }
    return std::nullopt;
}

}  // namespace bordered
