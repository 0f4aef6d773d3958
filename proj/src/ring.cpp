#include "bordered/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bordered {

template <std::int64_t Den>
std::string Fixed<Den>::to_string() const {
    const std::int64_t g = std::gcd(units_ < 0 ? -units_ : units_, Den);
    const std::int64_t num = g == 0 ? 0 : units_ / g;
    const std::int64_t den = g == 0 ? 1 : Den / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

template class Fixed<2>;
template class Fixed<4>;

// ---------------------------------------------------------------- ExpVector

ExpVector ExpVector::unit(EdgeId e, HalfInt power) {
    ExpVector v;
    if (!power.is_zero()) v.entries_.emplace_back(e, power);
    return v;
}

ExpVector ExpVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    ExpVector v;
    for (const auto& [e, p] : entries) {
        if (!v.entries_.empty() && v.entries_.back().first == e)
            v.entries_.back().second += p;
        else
            v.entries_.emplace_back(e, p);
    }
    std::erase_if(v.entries_, [](const Entry& x) { return x.second.is_zero(); });
    return v;
}

HalfInt ExpVector::at(EdgeId e) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const Entry& x, EdgeId k) { return x.first < k; });
    return (it != entries_.end() && it->first == e) ? it->second : HalfInt{};
}

bool ExpVector::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& x) { return x.second.is_integer(); });
}

ExpVector ExpVector::operator-() const {
    ExpVector r = *this;
    for (auto& x : r.entries_) x.second = -x.second;
    return r;
}

ExpVector operator+(const ExpVector& a, const ExpVector& b) {
    ExpVector r;
    r.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
            r.entries_.push_back(*i++);
        } else if (i == a.entries_.end() || j->first < i->first) {
            r.entries_.push_back(*j++);
        } else {
            const HalfInt s = i->second + j->second;
            if (!s.is_zero()) r.entries_.emplace_back(i->first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

ExpVector operator*(const ExpVector& a, std::int64_t k) {
    if (k == 0) return {};
    ExpVector r = a;
    for (auto& x : r.entries_) x.second = x.second * k;
    return r;
}

std::strong_ordering operator<=>(const ExpVector& a, const ExpVector& b) {
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first))
            return i->second <=> HalfInt{};
        if (i == a.entries_.end() || j->first < i->first) return HalfInt{} <=> j->second;
        if (auto c = i->second <=> j->second; c != 0) return c;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

// ------------------------------------------------------------ PoissonMatrix

void PoissonMatrix::add(EdgeId a, EdgeId b, int k) {
    data_[index(a) * size_ + index(b)] += k;
    data_[index(b) * size_ + index(a)] -= k;
}

QuarterInt PoissonMatrix::omega(const ExpVector& u, const ExpVector& v) const {
    std::int64_t quarters = 0;
    for (const auto& [a, ua] : u.entries())
        for (const auto& [b, vb] : v.entries()) {
            const int p = at(a, b);
            if (p != 0) quarters += ua.units() * vb.units() * p;
        }
    return QuarterInt::from_units(quarters);
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            const mpq_class f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t PoissonMatrix::rank() const {
    std::vector<std::vector<mpq_class>> m(size_, std::vector<mpq_class>(size_));
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) m[i][j] = data_[i * size_ + j];
    return rational_rank(std::move(m));
}

bool PoissonMatrix::annihilates(const ExpVector& v) const {
    for (std::size_t a = 0; a < size_; ++a) {
        std::int64_t s = 0;
        for (const auto& [b, vb] : v.entries()) s += vb.units() * data_[a * size_ + index(b)];
        if (s != 0) return false;
    }
    return true;
}

// ------------------------------------------------------------------- QCoeff

QCoeff::QCoeff(const BigInt& c) {
    if (c != 0) terms_.emplace(QuarterInt{}, c);
}

QCoeff QCoeff::monomial(QuarterInt power, const BigInt& c) {
    QCoeff r;
    r.add_term(power, c);
    return r;
}

QCoeff QCoeff::xi() { return monomial(QuarterInt(2)) - monomial(QuarterInt(-2)); }

void QCoeff::add_term(QuarterInt p, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<QuarterInt> QCoeff::single_power() const {
    if (terms_.size() != 1) return std::nullopt;
    return terms_.begin()->first;
}

QCoeff QCoeff::conj() const {
    QCoeff r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(-p, c);
    return r;
}

BigInt QCoeff::at_one() const {
    BigInt s = 0;
    for (const auto& [p, c] : terms_) s += c;
    return s;
}

QCoeff QCoeff::shifted(QuarterInt power) const {
    QCoeff r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p + power, c);
    return r;
}

QCoeff QCoeff::operator-() const {
    QCoeff r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

QCoeff& QCoeff::operator+=(const QCoeff& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    QCoeff r;
    for (const auto& [p, c] : a.terms_)
        for (const auto& [s, d] : b.terms_) r.add_term(p + s, c * d);
    return r;
}

// --------------------------------------------------------------- Assignment

Assignment::Assignment(std::span<const double> values) : values_(values.begin(), values.end()) {}

void Assignment::set(EdgeId e, double v) {
    if (index(e) >= values_.size()) values_.resize(index(e) + 1);
    values_[index(e)] = v;
}

double Assignment::at(EdgeId e) const {
    if (!has(e)) throw AssignmentError({e});
    return *values_[index(e)];
}

AssignmentError::AssignmentError(std::vector<EdgeId> missing)
    : std::runtime_error("missing coordinate values"), missing_(std::move(missing)) {}

// -------------------------------------------------------------- LaurentElem

LaurentElem::LaurentElem(const BigInt& c) {
    if (c != 0) terms_.emplace(ExpVector{}, c);
}

LaurentElem LaurentElem::monomial(const ExpVector& v, const BigInt& c) {
    LaurentElem r;
    r.add_term(v, c);
    return r;
}

void LaurentElem::add_term(const ExpVector& v, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentElem::has_positive_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentElem LaurentElem::operator-() const {
    LaurentElem r = *this;
    for (auto& [v, c] : r.terms_) c = -c;
    return r;
}

LaurentElem& LaurentElem::operator+=(const LaurentElem& o) {
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
}

LaurentElem& LaurentElem::operator-=(const LaurentElem& o) {
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
}

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
    LaurentElem r;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) r.add_term(u + v, c * d);
    return r;
}

double evaluate(const LaurentElem& a, const Assignment& at) {
    std::vector<EdgeId> missing;
    for (const auto& [v, c] : a.terms())
        for (const auto& [e, p] : v.entries())
            if (!at.has(e) && std::find(missing.begin(), missing.end(), e) == missing.end())
                missing.push_back(e);
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        throw AssignmentError(std::move(missing));
    }
    double s = 0.0;
    for (const auto& [v, c] : a.terms()) {
        double x = 0.0;
        for (const auto& [e, p] : v.entries()) x += p.value() * at.at(e);
        s += c.get_d() * std::exp(x);
    }
    return s;
}

// ---------------------------------------------------------------- TorusElem

TorusElem::TorusElem(TorusContext ctx, const QCoeff& c) : ctx_(std::move(ctx)) {
    add_term(ExpVector{}, c);
}

TorusElem TorusElem::monomial(TorusContext ctx, const ExpVector& v, const QCoeff& c) {
    TorusElem r(std::move(ctx));
    r.add_term(v, c);
    return r;
}

void TorusElem::add_term(const ExpVector& v, const QCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TorusElem::require_same_context(const TorusElem& o) const {
    if (ctx_ == o.ctx_) return;
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
        throw ContextError("torus elements live over different Poisson matrices");
}

TorusElem TorusElem::q_shifted(QuarterInt power) const {
    TorusElem r(ctx_);
    for (const auto& [v, c] : terms_) r.terms_.emplace(v, c.shifted(power));
    return r;
}

TorusElem TorusElem::scaled(const QCoeff& k) const {
    TorusElem r(ctx_);
    for (const auto& [v, c] : terms_) r.add_term(v, c * k);
    return r;
}

TorusElem TorusElem::operator-() const {
    TorusElem r = *this;
    for (auto& [v, c] : r.terms_) c = -c;
    return r;
}

TorusElem& TorusElem::operator+=(const TorusElem& o) {
    require_same_context(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& o) {
    require_same_context(o);
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
}

bool operator==(const TorusElem& a, const TorusElem& b) {
    a.require_same_context(b);
    return a.terms_ == b.terms_;
}

TorusElem torus_mul(const TorusElem& a, const TorusElem& b) {
    a.require_same_context(b);
    TorusElem r(a.ctx_);
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_)
            r.add_term(u + v, (c * d).shifted(a.ctx_->omega(u, v)));
    return r;
}

TorusElem hermitian_conjugate(const TorusElem& a) {
    TorusElem r(a.context());
    for (const auto& [v, c] : a.terms()) r.add_term(v, c.conj());
    return r;
}

LaurentElem classical_limit(const TorusElem& a) {
    LaurentElem r;
    for (const auto& [v, c] : a.terms()) r.add_term(v, c.at_one());
    return r;
}

TorusElem weyl_lift(TorusContext ctx, const LaurentElem& a) {
    TorusElem r(std::move(ctx));
    for (const auto& [v, c] : a.terms()) r.add_term(v, QCoeff(c));
    return r;
}

TorusElem commutator(const TorusElem& a, const TorusElem& b) { return a * b - b * a; }

// ---------------------------------------------------------------- rendering

namespace {

std::string edge_name(EdgeId e, EdgeNames names) {
    return index(e) < names.size() ? names[index(e)] : "E" + std::to_string(index(e));
}

bool is_one(const BigInt& c) { return c == 1; }

// Appends a signed term "c*body" to out, using " + " / " - " separators.
void append_term(std::string& out, const BigInt& c, const std::string& body) {
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (body.empty())
        out += mag.get_str();
    else if (is_one(mag))
        out += body;
    else
        out += mag.get_str() + "*" + body;
}

std::string render_power(QuarterInt p) {
    const std::string s = p.to_string();
    if (s == "1") return "q";
    if (s.find('/') != std::string::npos) return "q^(" + s + ")";
    return "q^" + s;
}

}  // namespace

std::string render(const ExpVector& v, EdgeNames names) {
    if (v.is_zero()) return "";
    std::string s;
    for (const auto& [e, p] : v.entries()) {
        const bool neg = p < HalfInt{};
        const HalfInt mag = neg ? -p : p;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? "-" : "+";
        if (mag != HalfInt(1)) s += mag.to_string() + "*";
        s += edge_name(e, names);
    }
    return "e^(" + s + ")";
}

std::string render(const QCoeff& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [p, k] : c.terms()) append_term(out, k, p.is_zero() ? "" : render_power(p));
    return out;
}

std::string render(const LaurentElem& a, EdgeNames names) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [v, c] : a.terms()) append_term(out, c, render(v, names));
    return out;
}

std::string render(const TorusElem& a, EdgeNames names) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [v, c] : a.terms()) {
        const std::string mono = render(v, names);
        if (auto p = c.single_power(); p && p->is_zero()) {
            append_term(out, c.terms().begin()->second, mono);
            continue;
        }
        if (auto p = c.single_power()) {
            const std::string body = mono.empty() ? render_power(*p) : render_power(*p) + "*" + mono;
            append_term(out, c.terms().begin()->second, body);
            continue;
        }
        const std::string body = "(" + render(c) + ")" + (mono.empty() ? "" : "*" + mono);
        append_term(out, 1, body);
    }
    return out;
}

}  // namespace bordered
