#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jetcl {

/// Exponent vector; length equals the number of ring variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    bool is_constant() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
        return r;
    }

    /// Exact quotient; caller guarantees other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (other.e_[i] > r.e_[i])
                throw std::invalid_argument("Monomial: non-exact division");
            r.e_[i] -= other.e_[i];
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] < r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    bool coprime_with(const Monomial& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && other.e_[i]) return false;
        return true;
    }

    /// Exponents clipped to 0/1 (support monomial).
    Monomial radical() const {
        Monomial r(*this);
        for (auto& x : r.e_) if (x > 1) x = 1;
        return r;
    }

    bool is_squarefree() const {
        for (auto x : e_) if (x > 1) return false;
        return true;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i]) s.push_back(i);
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    /// Arbitrary total order for use as a map key (not a monomial order).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<std::uint32_t> e_;
};

// --- monomial orders ------------------------------------------------------

inline bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // equal degree: a < b iff the last nonzero entry of a-b is positive
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

/// Block elimination order: the first `block` variables dominate
/// (degrevlex within each block). A Groebner basis under this order
/// eliminates the first block.
inline bool block_less(const Monomial& a, const Monomial& b, std::size_t block) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < block; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db;
    for (std::size_t i = block; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    for (std::size_t i = block; i < a.nvars(); ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db;
    for (std::size_t i = a.nvars(); i-- > block;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

struct MonomialOrder {
    enum class Kind { Lex, DegRevLex, Block };

    Kind kind = Kind::DegRevLex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
    static MonomialOrder block_elim(std::size_t first_block) { return {Kind::Block, first_block}; }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Lex: return lex_less(a, b);
            case Kind::DegRevLex: return degrevlex_less(a, b);
            case Kind::Block: return block_less(a, b, block);
        }
        return false;
    }
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.block == b.block;
    }
    friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.block < b.block;
    }
};

} // namespace jetcl
