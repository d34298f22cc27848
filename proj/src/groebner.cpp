#include "jetcl/groebner.hpp"

#include <algorithm>
#include <map>

#include "jetcl/errors.hpp"

namespace jetcl {

namespace {

// The engine works on term vectors sorted descending under the active
// order; Polynomial stores canonical degrevlex, so conversion is a sort.
using Term = Polynomial::Term;
using TermVec = std::vector<Term>;

TermVec to_vec(const Polynomial& p, const MonomialOrder& ord) {
    TermVec v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.first, b.first);
    });
    return v;
}

Polynomial to_poly(const RingPtr& ring, const TermVec& v) {
    return Polynomial::from_terms(ring, v);
}

// r = a - c * m * b, all inputs sorted descending under ord.
TermVec subtract_scaled(const TermVec& a, const Rational& c, const Monomial& m, const TermVec& b,
                        const MonomialOrder& ord) {
    TermVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial mb = b[j].first * m;
        if (a[i].first == mb) {
            Rational coeff = a[i].second - c * b[j].second;
            if (coeff != 0) r.emplace_back(a[i].first, std::move(coeff));
            ++i; ++j;
        } else if (ord.greater(a[i].first, mb)) {
            r.push_back(a[i]); ++i;
        } else {
            r.emplace_back(std::move(mb), -(c * b[j].second)); ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.emplace_back(b[j].first * m, -(c * b[j].second));
    return r;
}

TermVec nf_vec(TermVec h, const std::vector<TermVec>& basis, const MonomialOrder& ord) {
    TermVec rem;
    while (!h.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.front().first.divides(h.front().first)) {
                Rational c = h.front().second / g.front().second;
                h = subtract_scaled(h, c, h.front().first / g.front().first, g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(h.front());
            h.erase(h.begin());
        }
    }
    return rem;
}

void make_primitive(TermVec& f) {
    if (f.empty()) return;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : f) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.front().second < 0) scale = -scale;
    for (auto& [m, c] : f) c *= scale;
}

std::uint64_t weight_of(const Monomial& m, const std::vector<std::uint64_t>& w) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) s += m[i] * w[i];
    return s;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm_monomial;
    std::uint64_t lcm_degree;
};

class Engine {
public:
    Engine(const MonomialOrder& ord, const GroebnerOptions& opts) : ord_(ord), opts_(opts) {}

    std::vector<TermVec> run(std::vector<TermVec> input) {
        for (auto& f : input) {
            if (f.empty()) continue;
            if (opts_.weights && weight_of(f.front().first, *opts_.weights) > opts_.max_weight)
                continue;
            make_primitive(f);
            add_generator(std::move(f));
        }
        std::uint64_t processed = 0;
        while (!pairs_.empty()) {
            if (++processed > opts_.max_pairs)
                throw ResourceLimitError("buchberger: S-pair budget exceeded (" +
                                         std::to_string(opts_.max_pairs) + ")");
            auto it = select_pair();
            Pair p = *it;
            pairs_.erase(it);
            TermVec s = s_polynomial(basis_[p.i], basis_[p.j]);
            s = nf_vec(std::move(s), basis_, ord_);
            if (!s.empty()) {
                make_primitive(s);
                add_generator(std::move(s));
            }
        }
        interreduce();
        return basis_;
    }

private:
    std::vector<Pair>::iterator select_pair() {
        // normal strategy: minimal lcm degree, then lexicographic (i, j)
        return std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
            if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
    }

    TermVec s_polynomial(const TermVec& f, const TermVec& g) const {
        const Monomial l = lcm(f.front().first, g.front().first);
        TermVec a;
        a.reserve(f.size());
        const Monomial mf = l / f.front().first;
        for (const auto& [m, c] : f) a.emplace_back(m * mf, c / f.front().second);
        return subtract_scaled(a, Rational(1) / g.front().second, l / g.front().first, g, ord_);
    }

    void add_generator(TermVec h) {
        const std::size_t t = basis_.size();
        const Monomial& lm_h = h.front().first;

        // chain criterion: drop old pairs whose lcm is a proper multiple
        // of lm_h reachable through the new element
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (auto& p : pairs_) {
            if (lm_h.divides(p.lcm_monomial) &&
                lcm(basis_[p.i].front().first, lm_h) != p.lcm_monomial &&
                lcm(basis_[p.j].front().first, lm_h) != p.lcm_monomial)
                continue;
            kept.push_back(std::move(p));
        }
        pairs_ = std::move(kept);

        // new pairs, minimal lcms only
        std::vector<Pair> fresh;
        for (std::size_t k = 0; k < t; ++k) {
            Monomial l = lcm(basis_[k].front().first, lm_h);
            fresh.push_back({k, t, l, l.degree()});
        }
        std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) {
            if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
            return a.i < b.i;
        });
        std::vector<Pair> minimal;
        for (auto& p : fresh) {
            bool covered = false;
            for (const auto& q : minimal)
                if (q.lcm_monomial.divides(p.lcm_monomial)) { covered = true; break; }
            if (!covered) minimal.push_back(std::move(p));
        }
        for (auto& p : minimal) {
            // product criterion
            if (basis_[p.i].front().first.coprime_with(lm_h)) continue;
            if (opts_.weights &&
                weight_of(p.lcm_monomial, *opts_.weights) > opts_.max_weight)
                continue;
            pairs_.push_back(std::move(p));
        }
        basis_.push_back(std::move(h));
    }

    void interreduce() {
        // drop elements whose leading monomial another one divides
        // (keep the earlier element when leading monomials coincide)
        std::size_t i = 0;
        while (i < basis_.size()) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j) continue;
                const Monomial& lj = basis_[j].front().first;
                const Monomial& li = basis_[i].front().first;
                if (lj.divides(li) && (lj != li || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) basis_.erase(basis_.begin() + i);
            else ++i;
        }
        // fully reduce tails and normalize to monic
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<TermVec> others;
            others.reserve(basis_.size() - 1);
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (j != i) others.push_back(basis_[j]);
            basis_[i] = nf_vec(basis_[i], others, ord_);
            const Rational lc = basis_[i].front().second;
            for (auto& [m, c] : basis_[i]) c /= lc;
        }
        std::sort(basis_.begin(), basis_.end(), [&](const TermVec& a, const TermVec& b) {
            return ord_.greater(a.front().first, b.front().first);
        });
    }

    const MonomialOrder& ord_;
    const GroebnerOptions& opts_;
    std::vector<TermVec> basis_;
    std::vector<Pair> pairs_;
};

void check_weight_homogeneous(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    if (!opts.weights) return;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (opts.weights->size() != g.ring()->size())
            throw std::invalid_argument("buchberger: weight vector arity mismatch");
        const std::uint64_t w = weight_of(g.terms().front().first, *opts.weights);
        for (const auto& [m, c] : g.terms())
            if (weight_of(m, *opts.weights) != w)
                throw std::invalid_argument("buchberger: generator not weight-homogeneous");
    }
}

} // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, const MonomialOrder& order,
                                   const GroebnerOptions& options) {
    RingPtr ring;
    for (const auto& g : generators)
        if (!g.is_zero()) { ring = g.ring(); break; }
    if (!ring) return {};
    check_weight_homogeneous(generators, options);

    std::vector<TermVec> input;
    input.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring))
            throw std::invalid_argument("buchberger: ring mismatch among generators");
        input.push_back(to_vec(g, order));
    }
    Engine engine(order, options);
    auto basis = engine.run(std::move(input));
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& f : basis) out.push_back(to_poly(ring, f));
    return out;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    std::vector<TermVec> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), p.ring()))
            throw std::invalid_argument("normal_form: ring mismatch");
        b.push_back(to_vec(g, order));
    }
    return to_poly(p.ring(), nf_vec(to_vec(p, order), b, order));
}

// --- Ideal ------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    gens_.reserve(generators.size());
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_))
            throw std::invalid_argument("Ideal: generator ring mismatch");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order,
                                                     const GroebnerOptions& options) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
    auto basis = buchberger(gens_, order, options);
    return cache_->bases.emplace(order, std::move(basis)).first->second;
}

Polynomial Ideal::reduce(const Polynomial& p, const MonomialOrder& order) const {
    return normal_form(p, groebner_basis(order), order);
}

bool Ideal::contains(const Ideal& other) const {
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_monomial_ideal() const {
    for (const auto& g : gens_)
        if (!g.is_monomial()) return false;
    return true;
}

bool ideal_membership(const Polynomial& p, const Ideal& I) { return I.contains(p); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw std::invalid_argument("ideal_equal: ring mismatch");
    return I.groebner_basis() == J.groebner_basis();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw std::invalid_argument("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

namespace {

std::string fresh_aux_name(const RingSpec& ring, std::string stem) {
    while (ring.index_of(stem)) stem += "_";
    return stem;
}

// Renames p into a ring with extra variables; `position_of[i]` is the slot
// of the i-th old variable in the new ring.
Polynomial reindex(const Polynomial& p, const RingPtr& target, const std::vector<std::size_t>& position_of) {
    std::vector<Polynomial::Term> out;
    out.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        Monomial nm(target->size());
        for (std::size_t i = 0; i < m.nvars(); ++i) nm[position_of[i]] = m[i];
        out.emplace_back(std::move(nm), c);
    }
    return Polynomial::from_terms(target, std::move(out));
}

} // namespace

Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop) {
    if (drop.empty()) return I;
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->size();
    if (!drop.empty() && *drop.rbegin() >= n)
        throw std::invalid_argument("eliminate: variable index out of range");

    // permuted ring: dropped variables first
    std::vector<std::string> names;
    std::vector<std::size_t> position_of(n);
    for (std::size_t i : drop) {
        position_of[i] = names.size();
        names.push_back(ring->name(i));
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (drop.count(i)) continue;
        position_of[i] = names.size();
        kept.push_back(i);
        names.push_back(ring->name(i));
    }
    RingPtr permuted = make_ring(std::move(names));

    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(reindex(g, permuted, position_of));

    auto basis = buchberger(std::move(gens), MonomialOrder::block_elim(drop.size()));

    std::vector<Polynomial> out;
    for (const auto& g : basis) {
        bool uses_dropped = false;
        for (const auto& [m, c] : g.terms())
            for (std::size_t k = 0; k < drop.size() && !uses_dropped; ++k)
                if (m[k]) uses_dropped = true;
        if (uses_dropped) continue;
        // map back: kept variable k sits at slot drop.size()+idx
        std::vector<Polynomial::Term> terms;
        for (const auto& [m, c] : g.terms()) {
            Monomial om(n);
            for (std::size_t idx = 0; idx < kept.size(); ++idx)
                om[kept[idx]] = m[drop.size() + idx];
            terms.emplace_back(std::move(om), c);
        }
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return Ideal(ring, std::move(out));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw std::invalid_argument("ideal_intersect: ring mismatch");
    const RingPtr& ring = I.ring();
    if (!I.has_generators() || !J.has_generators()) return Ideal(ring);

    std::vector<std::string> names{fresh_aux_name(*ring, "t")};
    for (const auto& v : ring->names()) names.push_back(v);
    RingPtr aux = make_ring(std::move(names));

    std::vector<std::size_t> position_of(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) position_of[i] = i + 1;

    const Polynomial t = Polynomial::variable(aux, 0);
    const Polynomial one_minus_t = Polynomial::constant(aux, Rational(1)) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * reindex(f, aux, position_of));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * reindex(g, aux, position_of));

    auto basis = buchberger(std::move(gens), MonomialOrder::block_elim(1));
    std::vector<Polynomial> out;
    for (const auto& g : basis) {
        bool uses_t = false;
        for (const auto& [m, c] : g.terms())
            if (m[0]) { uses_t = true; break; }
        if (uses_t) continue;
        std::vector<Polynomial::Term> terms;
        for (const auto& [m, c] : g.terms()) {
            Monomial om(ring->size());
            for (std::size_t i = 0; i < ring->size(); ++i) om[i] = m[i + 1];
            terms.emplace_back(std::move(om), c);
        }
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return Ideal(ring, std::move(out));
}

namespace {

struct Staircase {
    std::vector<Monomial> leading;       // leading monomials of the reduced basis
    std::vector<std::uint32_t> box;      // per-variable pure-power bound
};

Staircase staircase_of(const Ideal& I) {
    const auto& basis = I.groebner_basis();
    const std::size_t n = I.ring()->size();
    Staircase s;
    for (const auto& g : basis) s.leading.push_back(g.leading_term().first);
    s.box.assign(n, 0);
    std::vector<bool> found(n, false);
    for (const auto& lm : s.leading) {
        auto supp = lm.support();
        if (lm.is_constant()) { // ideal is (1): empty staircase
            s.box.assign(n, 0);
            for (std::size_t i = 0; i < n; ++i) found[i] = true;
            return s;
        }
        if (supp.size() == 1) {
            const std::size_t v = supp[0];
            if (!found[v] || lm[v] < s.box[v]) { found[v] = true; s.box[v] = lm[v]; }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!found[i])
            throw UnsupportedClassError(
                "quotient_dimension: infinite-dimensional quotient (no pure power of '" +
                I.ring()->name(i) + "' among leading terms)");
    return s;
}

} // namespace

std::uint64_t quotient_dimension(const Ideal& I) {
    const Staircase s = staircase_of(I);
    const std::size_t n = I.ring()->size();
    // walk the finite box, counting monomials outside the leading-term ideal
    std::uint64_t count = 0;
    Monomial m(n);
    std::size_t pos = 0;
    while (true) {
        if (pos == n) {
            bool inside = false;
            for (const auto& lm : s.leading)
                if (lm.divides(m)) { inside = true; break; }
            if (!inside) ++count;
            // advance
            while (pos > 0) {
                --pos;
                if (m[pos] + 1 < s.box[pos]) { ++m[pos]; pos = n; break; }
                m[pos] = 0;
            }
            if (pos != n) break;
        } else {
            ++pos;
        }
    }
    return count;
}

namespace {

// first s >= 1 with I + m^s = I + m^(s+1); from there on the chain is
// constant and equal to the m-primary component of I at the origin
std::uint32_t chain_stall(const Ideal& I) {
    const std::uint64_t dim = quotient_dimension(I); // also checks Artinian
    for (std::uint32_t s = 1; s <= dim + 2; ++s) {
        if (ideal_equal(plus_maximal_power(I, s), plus_maximal_power(I, s + 1)))
            return s;
    }
    throw std::logic_error("chain_stall: no stall below the Artinian bound");
}

} // namespace

Ideal local_part(const Ideal& I) {
    if (quotient_dimension(I) == 0) return I; // I = (1)
    return plus_maximal_power(I, chain_stall(I));
}

bool is_origin_primary(const Ideal& I) {
    if (quotient_dimension(I) == 0) return true;
    return ideal_equal(plus_maximal_power(I, chain_stall(I)), I);
}

bool local_contains(const Ideal& I, const Polynomial& p) {
    if (I.contains(p)) return true;
    return local_part(I).contains(p);
}

std::uint64_t nilpotency_index(const Ideal& I) {
    if (quotient_dimension(I) == 0) return 0; // I = (1)
    return chain_stall(I);
}

Ideal maximal_ideal_power(const RingPtr& ring, std::uint32_t k) {
    if (k == 0) return Ideal(ring, {Polynomial::constant(ring, Rational(1))});
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(ring->size(), k))
        gens.emplace_back(ring, m, Rational(1));
    return Ideal(ring, std::move(gens));
}

Ideal plus_maximal_power(const Ideal& I, std::uint32_t k) {
    return ideal_sum(I, maximal_ideal_power(I.ring(), k));
}

} // namespace jetcl
