#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pencil/braid.hpp"

namespace pencil::braid {

// Left-greedy normal form Delta^infimum * F_1 * ... * F_k where every F_j is a
// permutation braid (each pair of strands crosses at most once), no F_j is
// trivial or the half twist, and every adjacent pair is left-weighted. Two
// words represent the same element of B_n exactly when these agree
// componentwise. Computation is polynomial in the letter count (quadratic
// sweeps over the factor list, linear work per factor pair).
struct GarsideNormalForm {
    int strands = 1;
    int infimum = 0;
    std::vector<Perm> factors;

    bool operator==(const GarsideNormalForm& o) const = default;

    bool trivial() const { return infimum == 0 && factors.empty(); }

    long long exponent_sum() const {
        long long n = strands;
        long long s = infimum * (n * (n - 1) / 2);
        for (const Perm& f : factors) s += crossings(f);
        return s;
    }

    Perm permutation() const {
        Perm p = (infimum % 2 == 0) ? perm_identity(strands) : perm_delta(strands);
        for (const Perm& f : factors) p = perm_compose(p, f);
        return p;
    }

    // Number of inversions = letters of the positive word the factor stands for.
    static long long crossings(const Perm& p) {
        long long c = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++c;
        return c;
    }
};

namespace detail {

// tau(P) = Delta^{-1} P Delta on permutation braids.
inline Perm tau(const Perm& p, const Perm& delta) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = delta[static_cast<std::size_t>(
            p[static_cast<std::size_t>(delta[i])])];
    return r;
}

// One permutation-braid factor kept with its inverse and crossing count so the
// left-weighting transfers below stay O(1) per moved crossing.
struct Factor {
    Perm p;
    Perm inv;
    long long cross = 0;
};

inline Factor make_factor(Perm p) {
    Factor f;
    f.cross = GarsideNormalForm::crossings(p);
    f.inv = perm_invert(p);
    f.p = std::move(p);
    return f;
}

// Whether factor f, read as a positive word, may be extended by sigma_{i+1}
// (0-based i): true iff the strands currently ending at positions i, i+1 have
// not crossed yet.
inline bool can_append(const Factor& f, int i) {
    return f.inv[static_cast<std::size_t>(i)] < f.inv[static_cast<std::size_t>(i + 1)];
}

inline void append_crossing(Factor& f, int i) {
    std::size_t a = static_cast<std::size_t>(f.inv[static_cast<std::size_t>(i)]);
    std::size_t b = static_cast<std::size_t>(f.inv[static_cast<std::size_t>(i + 1)]);
    f.p[a] = i + 1;
    f.p[b] = i;
    std::swap(f.inv[static_cast<std::size_t>(i)], f.inv[static_cast<std::size_t>(i + 1)]);
    ++f.cross;
}

inline void remove_leading_crossing(Factor& f, int i) {
    std::swap(f.p[static_cast<std::size_t>(i)], f.p[static_cast<std::size_t>(i + 1)]);
    f.inv[static_cast<std::size_t>(f.p[static_cast<std::size_t>(i)])] = i;
    f.inv[static_cast<std::size_t>(f.p[static_cast<std::size_t>(i + 1)])] = i + 1;
    --f.cross;
}

// Moves crossings from the head of b to the tail of a until the pair is
// left-weighted (every generator starting b also finishes a). Returns whether
// anything moved.
inline bool left_weight_pair(Factor& a, Factor& b, int n) {
    bool moved = false;
    bool again = true;
    while (again) {
        again = false;
        for (int i = 0; i + 1 < n; ++i) {
            bool starts_b = b.p[static_cast<std::size_t>(i)] > b.p[static_cast<std::size_t>(i + 1)];
            if (!starts_b) continue;
            bool finishes_a =
                a.inv[static_cast<std::size_t>(i)] > a.inv[static_cast<std::size_t>(i + 1)];
            if (finishes_a) continue;
            append_crossing(a, i);
            remove_leading_crossing(b, i);
            moved = true;
            again = true;
        }
    }
    return moved;
}

}  // namespace detail

inline GarsideNormalForm normal_form(const BraidWord& w) {
    const int n = w.strands();
    GarsideNormalForm nf;
    nf.strands = n;
    if (n == 1 || w.empty()) return nf;

    const Perm delta = perm_delta(n);
    const long long half_cross = static_cast<long long>(n) * (n - 1) / 2;

    // Suffix counts of negative letters: each Delta^{-1} emitted to the right
    // of a factor twists it by tau while migrating to the front.
    const auto& letters = w.letters();
    std::vector<int> neg_after(letters.size() + 1, 0);
    for (std::size_t j = letters.size(); j > 0; --j)
        neg_after[j - 1] = neg_after[j] + (letters[j - 1] < 0 ? 1 : 0);
    nf.infimum = -neg_after[0];

    // Greedy pass: translate letters into permutation-braid factors, merging
    // into the current factor whenever it stays a permutation braid.
    std::vector<detail::Factor> fs;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        Letter l = letters[j];
        bool twist = (neg_after[j + (l > 0 ? 0 : 1)] % 2) != 0;
        if (l > 0) {
            int i = l - 1;
            if (twist) i = n - 2 - i;
            if (!fs.empty() && detail::can_append(fs.back(), i)) {
                detail::append_crossing(fs.back(), i);
            } else {
                Perm p = perm_identity(n);
                std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
                fs.push_back(detail::make_factor(std::move(p)));
            }
        } else {
            // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); the positive part
            // is the half twist missing one final crossing.
            int i = -l - 1;
            if (twist) i = n - 2 - i;
            Perm p = perm_compose(delta, [&] {
                Perm s = perm_identity(n);
                std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
                return s;
            }());
            fs.push_back(detail::make_factor(std::move(p)));
        }
    }

    // Left-weighting fixpoint over adjacent pairs, dropping trivial factors.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::ptrdiff_t j = 0; j + 1 < static_cast<std::ptrdiff_t>(fs.size()); ++j) {
            if (detail::left_weight_pair(fs[static_cast<std::size_t>(j)],
                                         fs[static_cast<std::size_t>(j + 1)], n))
                changed = true;
            if (fs[static_cast<std::size_t>(j + 1)].cross == 0) {
                fs.erase(fs.begin() + j + 1);
                changed = true;
                --j;  // revisit the same left factor against its new successor
            }
        }
        if (!fs.empty() && fs.front().cross == 0) {
            fs.erase(fs.begin());
            changed = true;
        }
    }

    // Half-twist factors pile up on the left; absorb them into the infimum.
    std::size_t lead = 0;
    while (lead < fs.size() && fs[lead].cross == half_cross) ++lead;
    nf.infimum += static_cast<int>(lead);

    nf.factors.reserve(fs.size() - lead);
    for (std::size_t j = lead; j < fs.size(); ++j) nf.factors.push_back(std::move(fs[j].p));
    return nf;
}

inline bool equals(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("cannot compare braids on different strand counts");
    return normal_form(u) == normal_form(v);
}

inline bool is_trivial(const BraidWord& w) { return normal_form(w).trivial(); }

}  // namespace pencil::braid
