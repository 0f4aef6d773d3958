#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bordered/fatgraph.hpp"
#include "bordered/geodesic.hpp"
#include "bordered/ring.hpp"

namespace bordered {

enum class AlgebraKind { a_series, d_series };
enum class Regime { classical, quantum };

int minimum_size(AlgebraKind kind);
FatGraph algebra_graph(AlgebraKind kind, int n);
// Canonical path for G_ij (1-based); A_n needs i < j, D_n allows any pair including i == j.
PathWord generator_word(AlgebraKind kind, int n, int i, int j);

// q-scaling of an entry by q^k; classical entries ignore it.
inline LaurentElem q_scaled(const LaurentElem& x, int) { return x; }
inline double q_scaled(double x, int) { return x; }
inline TorusElem q_scaled(const TorusElem& x, int k) { return x.q_shifted(QuarterInt(k)); }

inline LaurentElem adjoint(const LaurentElem& x) { return x; }
inline double adjoint(double x) { return x; }
inline TorusElem adjoint(const TorusElem& x) { return hermitian_conjugate(x); }

inline LaurentElem constant_like(const LaurentElem&, long c) { return LaurentElem(c); }
inline double constant_like(double, long c) { return static_cast<double>(c); }
inline TorusElem constant_like(const TorusElem& x, long c) { return TorusElem(x.context(), QCoeff(c)); }

// Square matrix with 1-based indexing. For the A_n algebra the generators sit above
// the diagonal; the diagonal holds q^{-1} (1 classically) and the rest is zero.
template <class T>
class GeneratorMatrix {
public:
    GeneratorMatrix(AlgebraKind kind, int n, const T& zero)
        : kind_(kind), n_(n), cells_(static_cast<std::size_t>(n * n), zero) {}

    AlgebraKind kind() const { return kind_; }
    int n() const { return n_; }
    const T& operator()(int i, int j) const { return cells_[cell(i, j)]; }
    T& operator()(int i, int j) { return cells_[cell(i, j)]; }
    T zero() const { return constant_like(cells_.front(), 0); }

    friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    std::size_t cell(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("generator index out of range");
        return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
    }

    AlgebraKind kind_;
    int n_;
    std::vector<T> cells_;
};

GeneratorMatrix<LaurentElem> classical_generators(AlgebraKind kind, int n);
GeneratorMatrix<TorusElem> quantum_generators(AlgebraKind kind, int n);
GeneratorMatrix<double> numeric_generators(AlgebraKind kind, int n, const Assignment& at);

// Braid generator R_{i,i+1} acting on the generator set.
template <class T>
GeneratorMatrix<T> braid_generators(const GeneratorMatrix<T>& g, int i) {
    const int n = g.n();
    if (i < 1 || i >= n) throw std::out_of_range("braid index out of range");
    const int ip = i + 1;
    GeneratorMatrix<T> h = g;
    const T& link = g(i, ip);
    const auto twist = [&](const T& x, const T& y) { return q_scaled(link * x, 1) - q_scaled(y, 2); };
    if (g.kind() == AlgebraKind::a_series) {
        for (int j = ip + 1; j <= n; ++j) {
            h(ip, j) = g(i, j);
            h(i, j) = twist(g(i, j), g(ip, j));
        }
        for (int j = 1; j < i; ++j) {
            h(j, ip) = g(j, i);
            h(j, i) = twist(g(j, i), g(j, ip));
        }
        return h;
    }
    for (int k = 1; k <= n; ++k) {
        if (k == i || k == ip) continue;
        h(ip, k) = g(i, k);
        h(k, ip) = g(k, i);
        h(i, k) = twist(g(i, k), g(ip, k));
        h(k, i) = twist(g(k, i), g(k, ip));
    }
    h(ip, ip) = g(i, i);
    h(i, i) = twist(g(i, i), g(ip, ip));
    h(ip, i) = g(ip, i) + g(i, i) * link * g(i, i) - q_scaled(g(ip, ip) * g(i, i), -1) -
               q_scaled(g(i, i) * g(ip, ip), 1);
    return h;
}

template <class T>
GeneratorMatrix<T> multiply(const GeneratorMatrix<T>& a, const GeneratorMatrix<T>& b) {
    GeneratorMatrix<T> r(a.kind(), a.n(), a.zero());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j) {
            T s = a.zero();
            for (int k = 1; k <= a.n(); ++k) s += a(i, k) * b(k, j);
            r(i, j) = std::move(s);
        }
    return r;
}

// Transposed matrix with every entry replaced by its adjoint.
template <class T>
GeneratorMatrix<T> dagger(const GeneratorMatrix<T>& a) {
    GeneratorMatrix<T> r = a;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j) r(i, j) = adjoint(a(j, i));
    return r;
}

// Identity except for the block [[q G_{i,i+1}, -q^2], [1, 0]] at rows and columns i, i+1.
template <class T>
GeneratorMatrix<T> braid_block(const GeneratorMatrix<T>& g, int i) {
    GeneratorMatrix<T> b(g.kind(), g.n(), g.zero());
    const T one = constant_like(g.zero(), 1);
    for (int k = 1; k <= g.n(); ++k) b(k, k) = one;
    b(i, i) = q_scaled(g(i, i + 1), 1);
    b(i, i + 1) = -q_scaled(one, 2);
    b(i + 1, i) = one;
    b(i + 1, i + 1) = g.zero();
    return b;
}

// B M B^dagger with the braid block built from the generator matrix g.
template <class T>
GeneratorMatrix<T> braid_conjugate(const GeneratorMatrix<T>& g, const GeneratorMatrix<T>& m, int i) {
    const auto b = braid_block(g, i);
    return multiply(multiply(b, m), dagger(b));
}

// Skew invariant matrix: G_ji + q^2 G_ij - q G_ii G_jj above the diagonal, minus its adjoint below.
template <class T>
GeneratorMatrix<T> skew_invariant(const GeneratorMatrix<T>& g) {
    GeneratorMatrix<T> r(g.kind(), g.n(), g.zero());
    for (int i = 1; i <= g.n(); ++i)
        for (int j = 1; j <= g.n(); ++j) {
            if (j > i)
                r(i, j) = g(j, i) + q_scaled(g(i, j), 2) - q_scaled(g(i, i) * g(j, j), 1);
            else if (j < i)
                r(i, j) = -g(i, j) - q_scaled(g(j, i), -2) + q_scaled(g(i, i) * g(j, j), -1);
        }
    return r;
}

// Rank-one matrix of products of the loop generators G_ii G_jj.
template <class T>
GeneratorMatrix<T> loop_product_matrix(const GeneratorMatrix<T>& g) {
    GeneratorMatrix<T> r(g.kind(), g.n(), g.zero());
    for (int i = 1; i <= g.n(); ++i)
        for (int j = 1; j <= g.n(); ++j) r(i, j) = g(i, i) * g(j, j);
    return r;
}

// (P g)_ij = g_{i+1, j+1} with indices mod n.
template <class T>
GeneratorMatrix<T> cyclic_shift(const GeneratorMatrix<T>& g) {
    GeneratorMatrix<T> r = g;
    const int n = g.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r(i, j) = g(i % n + 1, j % n + 1);
    return r;
}

// Superdiagonal (upper) or subdiagonal ones with the given corner entry.
template <class T>
GeneratorMatrix<T> shift_matrix(const GeneratorMatrix<T>& like, bool upper, const T& corner) {
    GeneratorMatrix<T> r(like.kind(), like.n(), like.zero());
    const T one = constant_like(like.zero(), 1);
    const int n = like.n();
    for (int a = 1; a < n; ++a) {
        if (upper)
            r(a, a + 1) = one;
        else
            r(a + 1, a) = one;
    }
    if (upper)
        r(n, 1) = corner;
    else
        r(1, n) = corner;
    return r;
}

// Pfaffian by expansion along the first row; zero for odd size.
LaurentElem pfaffian(const GeneratorMatrix<LaurentElem>& m);
bool has_rank_at_most_one(const GeneratorMatrix<LaurentElem>& m);

// Coordinate action of R_{i,i+1} on the A_n chain graph.
Assignment braid_coordinates(int n, int i, const Assignment& at);

// Index map (i,j) -> (k,l) with entry_ij after the chain R_{n-1,n}...R_{1,2} equal to entry_kl before.
struct IndexImage {
    int i, j, k, l;
};
template <class T>
GeneratorMatrix<T> apply_chain(GeneratorMatrix<T> g) {
    for (int i = 1; i < g.n(); ++i) g = braid_generators(g, i);
    return g;
}

template <class T>
std::optional<std::vector<IndexImage>> chain_permutation(const GeneratorMatrix<T>& a) {
    const auto image = apply_chain(a);
    std::vector<IndexImage> out;
    const int n = a.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool found = false;
            for (int k = 1; k <= n && !found; ++k)
                for (int l = k + 1; l <= n && !found; ++l)
                    if (image(i, j) == a(k, l)) {
                        out.push_back({i, j, k, l});
                        found = true;
                    }
            if (!found) return std::nullopt;
        }
    return out;
}

struct ChainWitness {
    std::vector<double> point;  // coordinate values in edge order
    int i = 0;
    int j = 0;
    double before = 0;
    double after = 0;
};

// Searches random points for an entry not restored by the n-th power of the chain.
std::optional<ChainWitness> chain_power_counterexample(AlgebraKind kind, int n, std::uint64_t seed, int samples,
                                                       double tol);

std::vector<double> random_point(std::size_t size, std::uint64_t seed, int sample, double spread = 1.0);

}  // namespace bordered
