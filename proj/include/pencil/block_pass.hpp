#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencil/braid.hpp"
#include "pencil/garside.hpp"
#include "pencil/hurwitz.hpp"

namespace pencil::braid {

// T and U pass one block of strands over the other inside B_{2g+2}: T takes
// the leading 2h+2 strands over the trailing 2g-2h, U brings the trailing
// block back over. Each factors into 2g-2h single letters (tau_i resp.
// upsilon_i) of exponent sum one: a pull/push run across the other block
// combined with one inverse chain on the 2h+2 block. Together with chain
// words they assemble the full twist:
//   T U (s1..s_{2h+1})^{2g-2h} (s_{2h+1}..s1)^{2g+2} (s_{2h+3}..s_{2g+1})^{2g-2h} = Delta^2.
//
// Which side of the run the internal chain sits on, and the order its letters
// are read in, is a diagram-reading convention. The convention is pinned by
// derive_block_pass_convention(), which searches the finite space and keeps
// the unique choice passing all postconditions on the calibration pairs
// (g,h) = (2,1), (3,1), (3,2); the winner ships as kFrozenBlockPass.

enum class ChainSide { before, after };
enum class ChainOrder { ascending, descending };

struct BlockPassConvention {
    ChainSide t_side = ChainSide::after;
    ChainOrder t_order = ChainOrder::ascending;
    int t_sign = -1;
    ChainSide u_side = ChainSide::before;
    ChainOrder u_order = ChainOrder::ascending;
    int u_sign = -1;

    bool operator==(const BlockPassConvention&) const = default;
};

struct BlockPassBraids {
    int strands = 2;
    FactoredBraid t_letters;  // tau_1 .. tau_m in product order
    FactoredBraid u_letters;  // upsilon_m .. upsilon_1 in product order
    BraidWord t{2}, u{2};
};

namespace detail {

inline void push_span(BraidWord& w, int lo, int hi, ChainOrder order, int sign) {
    if (lo > hi) return;
    if (order == ChainOrder::ascending)
        for (int i = lo; i <= hi; ++i) w.push(sign * i);
    else
        for (int i = hi; i >= lo; --i) w.push(sign * i);
}

}  // namespace detail

inline BlockPassBraids block_pass_braids(int g, int h, const BlockPassConvention& cv) {
    if (h < 1 || h >= g) throw std::invalid_argument("block pass needs 1 <= h < g");
    const int n = 2 * g + 2;
    const int k = 2 * h + 2;
    const int m = 2 * g - 2 * h;
    BlockPassBraids out;
    out.strands = n;
    out.t_letters.strands = n;
    out.u_letters.strands = n;

    for (int i = 1; i <= m; ++i) {
        // Pull the i-th trailing strand from position k+i to position i; the
        // 2h+2 block sits at positions i..k+i-1 before the run, i+1..k+i after.
        BraidWord tau(n);
        if (cv.t_side == ChainSide::before)
            detail::push_span(tau, i, k + i - 2, cv.t_order, cv.t_sign);
        for (int s = k + i - 1; s >= i; --s) tau.push(s);
        if (cv.t_side == ChainSide::after)
            detail::push_span(tau, i + 1, k + i - 1, cv.t_order, cv.t_sign);
        out.t_letters.factors.push_back(tau);
    }

    for (int j = m; j >= 1; --j) {
        // Push the j-th leading strand from position j to position j+k; the
        // 2h+2 block sits at positions j+1..j+k before the run, j..j+k-1 after.
        BraidWord ups(n);
        if (cv.u_side == ChainSide::before)
            detail::push_span(ups, j + 1, j + k - 1, cv.u_order, cv.u_sign);
        for (int s = j; s <= j + k - 1; ++s) ups.push(s);
        if (cv.u_side == ChainSide::after)
            detail::push_span(ups, j, j + k - 2, cv.u_order, cv.u_sign);
        out.u_letters.factors.push_back(ups);
    }

    out.t = out.t_letters.product();
    out.u = out.u_letters.product();
    return out;
}

// T U (s1..s_{2h+1})^{2g-2h} (s_{2h+1}..s1)^{2g+2} (s_{2h+3}..s_{2g+1})^{2g-2h}
inline BraidWord master_identity_word(int g, int h, const BlockPassBraids& bp) {
    const int n = 2 * g + 2;
    const int k = 2 * h + 2;
    const int m = 2 * g - 2 * h;
    BraidWord w = bp.t;
    w.append(bp.u);
    w.append(chain_word(n, k, m, false));
    w.append(chain_word(n, k, n, true));
    if (k + 1 <= n - 1) w.append(chain_span_word(n, k + 1, n - 1, m, false));
    return w;
}

struct BlockPassCheck {
    bool exponent_sums = false;   // (iii) exp(T) = exp(U) = 2g-2h
    bool forgets = false;         // (iv) induced braids on each block alone
    bool master_identity = false; // (i) the word above equals Delta^2
    bool all() const { return exponent_sums && forgets && master_identity; }
};

inline BlockPassCheck check_block_pass(int g, int h, const BlockPassBraids& bp,
                                       bool include_master = true) {
    const int n = 2 * g + 2;
    const int k = 2 * h + 2;
    const int m = 2 * g - 2 * h;
    BlockPassCheck r;
    r.exponent_sums = bp.t.exponent_sum() == m && bp.u.exponent_sum() == m;
    for (const auto& f : bp.t_letters.factors) r.exponent_sums &= f.exponent_sum() == 1;
    for (const auto& f : bp.u_letters.factors) r.exponent_sums &= f.exponent_sum() == 1;

    std::vector<int> lead, trail;
    for (int s = 1; s <= k; ++s) lead.push_back(s);
    for (int s = k + 1; s <= n; ++s) trail.push_back(s);
    std::vector<int> u_lead, u_trail;  // in U the 2h+2 block starts at the back
    for (int s = 1; s <= m; ++s) u_lead.push_back(s);
    for (int s = m + 1; s <= n; ++s) u_trail.push_back(s);

    BraidWord chain_inv = invert(chain_word(k, k, m, false));           // (s1..s_{k-1})^{-m}, read forwards
    BraidWord chain_inv_word(k);
    for (int c = 0; c < m; ++c)
        for (int i = 1; i <= k - 1; ++i) chain_inv_word.push(-i);       // (s1^- .. s_{k-1}^-)^m
    BraidWord rev_chain_inv_word(k);
    for (int c = 0; c < m; ++c)
        for (int i = k - 1; i >= 1; --i) rev_chain_inv_word.push(-i);   // (s_{k-1}^- .. s1^-)^m

    r.forgets = equals(forget_strands(bp.t, lead), chain_inv_word) &&
                is_trivial(forget_strands(bp.t, trail)) &&
                equals(forget_strands(bp.u, u_trail), rev_chain_inv_word) &&
                is_trivial(forget_strands(bp.u, u_lead));
    (void)chain_inv;

    if (include_master)
        r.master_identity = equals(master_identity_word(g, h, bp), full_twist_word(n));
    return r;
}

// The frozen convention: each tau pulls a trailing strand across and then
// undoes the chain braiding it dragged onto the leading block (ascending
// inverse chain); each upsilon undoes in descending order and then pushes a
// leading strand back across. config/default.toml carries the same values.
inline constexpr BlockPassConvention kFrozenBlockPass{
    ChainSide::after, ChainOrder::ascending, -1,
    ChainSide::before, ChainOrder::descending, -1};

inline BlockPassBraids block_pass_braids(int g, int h) {
    auto bp = block_pass_braids(g, h, kFrozenBlockPass);
    auto ck = check_block_pass(g, h, bp, /*include_master=*/false);
    if (!ck.exponent_sums || !ck.forgets)
        throw std::logic_error("frozen block-pass convention failed its postconditions at g=" +
                               std::to_string(g) + " h=" + std::to_string(h));
    return bp;
}

// Searches the convention space against the three calibration pairs. Returns
// every passing convention; the caller insists on exactly one.
inline std::vector<BlockPassConvention> search_block_pass_conventions() {
    std::vector<BlockPassConvention> winners;
    const std::vector<std::pair<int, int>> pairs = {{2, 1}, {3, 1}, {3, 2}};
    for (ChainSide ts : {ChainSide::before, ChainSide::after})
        for (ChainOrder to : {ChainOrder::ascending, ChainOrder::descending})
            for (int tsg : {-1, 1})
                for (ChainSide us : {ChainSide::before, ChainSide::after})
                    for (ChainOrder uo : {ChainOrder::ascending, ChainOrder::descending})
                        for (int usg : {-1, 1}) {
                            BlockPassConvention cv{ts, to, tsg, us, uo, usg};
                            bool ok = true;
                            for (auto [g, h] : pairs) {
                                auto bp = block_pass_braids(g, h, cv);
                                if (!check_block_pass(g, h, bp).all()) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (ok) winners.push_back(cv);
                        }
    return winners;
}

// Re-derives the frozen convention from scratch. Several word-level spellings
// can pass (the run transports the block in parallel, so the internal chain
// reads the same on either side of it); they must all agree letter by letter
// as braid elements, and the frozen spelling must be among them.
inline BlockPassConvention derive_block_pass_convention() {
    auto winners = search_block_pass_conventions();
    if (winners.empty())
        throw std::logic_error("block-pass convention search found no admissible convention");
    const std::vector<std::pair<int, int>> pairs = {{2, 1}, {3, 1}, {3, 2}};
    for (auto [g, h] : pairs) {
        auto ref = block_pass_braids(g, h, winners.front());
        for (std::size_t j = 1; j < winners.size(); ++j) {
            auto bp = block_pass_braids(g, h, winners[j]);
            for (std::size_t i = 0; i < bp.t_letters.factors.size(); ++i)
                if (!equals(bp.t_letters.factors[i], ref.t_letters.factors[i]))
                    throw std::logic_error("block-pass search winners disagree as braid elements");
            for (std::size_t i = 0; i < bp.u_letters.factors.size(); ++i)
                if (!equals(bp.u_letters.factors[i], ref.u_letters.factors[i]))
                    throw std::logic_error("block-pass search winners disagree as braid elements");
        }
    }
    for (const auto& w : winners)
        if (w == kFrozenBlockPass) return w;
    throw std::logic_error("frozen block-pass convention is not among the search winners");
}

}  // namespace pencil::braid
