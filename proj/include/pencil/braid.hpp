#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pencil::braid {

// Artin generator letters: +i encodes sigma_i, -i encodes sigma_i^{-1},
// with 1 <= i < strands. Words are kept freely reduced at all times, so
// sigma_i followed by sigma_i^{-1} never survives construction.
using Letter = int;

// Permutations on {0, .., n-1} stored as image lists: p[i] is where strand i ends.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Apply a, then b.
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
    return r;
}

inline Perm perm_invert(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

inline bool perm_is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

// The half-twist permutation i -> n-1-i.
inline Perm perm_delta(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return p;
}

class BraidWord {
public:
    explicit BraidWord(int strands, const std::vector<Letter>& letters = {}) : strands_(strands) {
        if (strands < 1) throw std::invalid_argument("braid word needs at least one strand");
        letters_.reserve(letters.size());
        for (Letter l : letters) push(l);
    }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Appends one letter, cancelling against the current tail when possible.
    void push(Letter l) {
        int idx = l > 0 ? l : -l;
        if (l == 0 || idx >= strands_)
            throw std::invalid_argument("letter " + std::to_string(l) + " out of range for " +
                                        std::to_string(strands_) + " strands");
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    void append(const BraidWord& w) {
        if (w.strands_ != strands_)
            throw std::invalid_argument("strand count mismatch: " + std::to_string(strands_) +
                                        " vs " + std::to_string(w.strands_));
        for (Letter l : w.letters_) push(l);
    }

    long long exponent_sum() const {
        long long s = 0;
        for (Letter l : letters_) s += (l > 0) ? 1 : -1;
        return s;
    }

    Perm permutation() const {
        Perm pos = perm_identity(strands_);  // pos[i] = current position of strand i
        for (Letter l : letters_) {
            int i = (l > 0 ? l : -l) - 1;
            for (auto& v : pos) {
                if (v == i)
                    v = i + 1;
                else if (v == i + 1)
                    v = i;
            }
        }
        return pos;
    }

    bool operator==(const BraidWord& o) const = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

inline BraidWord compose(const BraidWord& u, const BraidWord& v) {
    BraidWord r = u;
    r.append(v);
    return r;
}

inline BraidWord invert(const BraidWord& w) {
    BraidWord r(w.strands());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) r.push(-*it);
    return r;
}

inline BraidWord power(const BraidWord& w, int k) {
    const BraidWord& base = k >= 0 ? w : invert(w);
    BraidWord r(w.strands());
    for (int j = std::abs(k); j > 0; --j) r.append(base);
    return r;
}

// sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1): the positive half twist.
inline BraidWord delta_word(int n) {
    BraidWord w(n);
    for (int j = 1; j < n; ++j)
        for (int i = j; i >= 1; --i) w.push(i);
    return w;
}

inline BraidWord full_twist_word(int n) {
    BraidWord w = delta_word(n);
    w.append(delta_word(n));
    return w;
}

// (sigma_lo sigma_{lo+1} ... sigma_hi)^count over an arbitrary generator span,
// descending order instead when reversed is set.
inline BraidWord chain_span_word(int n, int lo, int hi, int count, bool reversed = false) {
    if (lo < 1 || hi >= n || lo > hi) throw std::invalid_argument("chain span out of range");
    if (count < 0) throw std::invalid_argument("chain power must be nonnegative");
    BraidWord w(n);
    for (int c = 0; c < count; ++c) {
        if (!reversed)
            for (int i = lo; i <= hi; ++i) w.push(i);
        else
            for (int i = hi; i >= lo; --i) w.push(i);
    }
    return w;
}

// (sigma_1 ... sigma_{k-1})^count on the first k strands of B_n.
inline BraidWord chain_word(int n, int k, int count, bool reversed = false) {
    if (k < 2 || k > n) throw std::invalid_argument("chain block size out of range");
    return chain_span_word(n, 1, k - 1, count, reversed);
}

// Full twist on the first k strands, built as the embedded half twist squared.
// Equal to chain_word(n, k, k) as a braid, by construction via a different word.
inline BraidWord block_full_twist_word(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("block size out of range");
    BraidWord w(n);
    for (int rep = 0; rep < 2; ++rep)
        for (int j = 1; j < k; ++j)
            for (int i = j; i >= 1; --i) w.push(i);
    return w;
}

// Deletes all strands not listed in keep (1-based starting positions) and
// returns the braid induced on the remaining ones. Crossings between two kept
// strands survive with their sign; crossings involving a deleted strand vanish.
inline BraidWord forget_strands(const BraidWord& w, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("cannot forget every strand");
    std::vector<bool> kept(static_cast<std::size_t>(w.strands()), false);
    for (int s : keep) {
        if (s < 1 || s > w.strands()) throw std::invalid_argument("kept strand out of range");
        if (kept[static_cast<std::size_t>(s - 1)]) throw std::invalid_argument("duplicate kept strand");
        kept[static_cast<std::size_t>(s - 1)] = true;
    }
    BraidWord out(static_cast<int>(keep.size()));
    std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (Letter l : w.letters()) {
        int i = (l > 0 ? l : -l) - 1;
        int u = strand_at[static_cast<std::size_t>(i)];
        int v = strand_at[static_cast<std::size_t>(i + 1)];
        if (kept[static_cast<std::size_t>(u)] && kept[static_cast<std::size_t>(v)]) {
            int rank = 0;  // kept strands strictly left of position i
            for (int p = 0; p < i; ++p)
                if (kept[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)])]) ++rank;
            out.push(l > 0 ? rank + 1 : -(rank + 1));
        }
        std::swap(strand_at[static_cast<std::size_t>(i)], strand_at[static_cast<std::size_t>(i + 1)]);
    }
    return out;
}

}  // namespace pencil::braid
