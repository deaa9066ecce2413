#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pencil/braid.hpp"

namespace pencil::braid {

// An ordered factorization of a braid; the represented element is the product
// of the factors read left to right.
struct FactoredBraid {
    int strands = 1;
    std::vector<BraidWord> factors;

    BraidWord product() const {
        BraidWord w(strands);
        for (const BraidWord& f : factors) w.append(f);
        return w;
    }
};

enum class HurwitzDirection { right, left };

// Elementary Hurwitz move at 1-based position j, acting on (F_j, F_{j+1}):
//   right: (F_j F_{j+1} F_j^{-1}, F_j)
//   left:  (F_{j+1}, F_{j+1}^{-1} F_j F_{j+1})
// The two directions are mutually inverse, and either leaves the product
// unchanged as a word (free reduction restores it exactly).
inline FactoredBraid hurwitz_move(const FactoredBraid& f, std::size_t position,
                                  HurwitzDirection dir = HurwitzDirection::right) {
    if (position < 1 || position >= f.factors.size() || f.factors.empty())
        throw std::invalid_argument("hurwitz move position out of range");
    FactoredBraid r = f;
    BraidWord& a = r.factors[position - 1];
    BraidWord& b = r.factors[position];
    if (dir == HurwitzDirection::right) {
        BraidWord conj = compose(compose(a, b), invert(a));
        b = a;
        a = conj;
    } else {
        BraidWord conj = compose(compose(invert(b), a), b);
        a = b;
        b = conj;
    }
    return r;
}

}  // namespace pencil::braid
