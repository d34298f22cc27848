#include "jetcl/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jetcl {

namespace {

struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

} // namespace

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
    if (constant != 0)
        terms_.emplace_back(Monomial(ring_->size()), constant);
}

Polynomial::Polynomial(RingPtr ring, const Monomial& mono, const Rational& coeff) : ring_(std::move(ring)) {
    if (mono.nvars() != ring_->size())
        throw std::invalid_argument("Polynomial: monomial arity mismatch");
    if (coeff != 0)
        terms_.emplace_back(mono, coeff);
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index, std::uint32_t power) {
    if (index >= ring->size())
        throw std::invalid_argument("Polynomial::variable: index out of range");
    Monomial m(ring->size());
    m[index] = power;
    return power == 0 ? Polynomial(ring, Rational(1)) : Polynomial(ring, m, Rational(1));
}

void Polynomial::require_compatible(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_))
        throw std::invalid_argument("Polynomial: ring mismatch");
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::int64_t Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // terms are degrevlex-descending, so the first term has maximal degree
    return static_cast<std::int64_t>(terms_.front().first.degree());
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_constant())
        return terms_.back().second;
    return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    for (const auto& [m, c] : terms_)
        if (m == mono) return c;
    return Rational(0);
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::invalid_argument("Polynomial: leading term of zero");
    return terms_.front();
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
        throw std::invalid_argument("Polynomial: leading term of zero");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.less(best->first, t.first)) best = &t;
    return *best;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_compatible(other);
    Polynomial r(ring_ ? ring_ : other.ring_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const auto& a = terms_[i];
        const auto& b = other.terms_[j];
        if (a.first == b.first) {
            Rational c = a.second + b.second;
            if (c != 0) r.terms_.emplace_back(a.first, std::move(c));
            ++i; ++j;
        } else if (degrevlex_less(b.first, a.first)) {
            r.terms_.push_back(a); ++i;
        } else {
            r.terms_.push_back(b); ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_compatible(other);
    Polynomial r(ring_ ? ring_ : other.ring_);
    if (terms_.empty() || other.terms_.empty()) return r;
    std::map<Monomial, Rational, DegRevLexGreater> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma * mb;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), ca * cb);
            else it->second += ca * cb;
        }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c *= scalar;
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().second < 0) scale = -scale;
    return *this * scale;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    const Rational lc = leading_term(order).second;
    return *this * (Rational(1) / lc);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, Rational, DegRevLexGreater> acc;
    for (auto& [m, c] : terms) {
        if (m.nvars() != ring->size())
            throw std::invalid_argument("Polynomial::from_terms: arity mismatch");
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
        else it->second += c;
    }
    Polynomial r(std::move(ring));
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool is_const = m.is_constant();
        if (a != 1 || is_const) {
            os << a.get_str();
            if (!is_const) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << ring_->name(i);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
    Polynomial r(base.ring(), Rational(1));
    for (std::uint32_t i = 0; i < exponent; ++i) r = r * base;
    return r;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, const RingPtr& target) {
    if (!p.ring())
        throw std::invalid_argument("substitute: polynomial has no ring");
    if (images.size() != p.ring()->size())
        throw std::invalid_argument("substitute: missing image for a variable");
    for (const auto& img : images)
        if (!same_ring(img.ring(), target))
            throw std::invalid_argument("substitute: image ring mismatch");

    // per-variable power cache
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m[i]) term = term * power_of(i, m[i]);
        result = result + term;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (!p.ring() || var >= p.ring()->size())
        throw std::invalid_argument("partial_derivative: variable out of range");
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        out.emplace_back(dm, c * Rational(m[var]));
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

namespace {

void enumerate_degree(std::size_t nvars, std::uint32_t remaining, std::size_t pos,
                      Monomial& current, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        current[pos] = remaining;
        out.push_back(current);
        current[pos] = 0;
        return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
        current[pos] = e;
        enumerate_degree(nvars, remaining - e, pos + 1, current, out);
    }
    current[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial current(nvars);
    enumerate_degree(nvars, d, 0, current, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return degrevlex_less(b, a);
    });
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t k = 1; k <= d; ++k) {
        auto level = monomials_of_degree(nvars, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace jetcl
