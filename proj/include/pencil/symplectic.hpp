#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pencil::sp {

// Homology vectors in the interleaved basis a_1, b_1, a_2, b_2, ..., a_g, b_g
// of H_1 of a closed genus-g surface, with <a_j, b_j> = 1.
using Vec = std::vector<mpz_class>;

// Dense square matrix over arbitrary-precision integers, row-major.
class IntMat {
public:
    explicit IntMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n <= 0) throw std::invalid_argument("IntMat: size must be positive");
    }

    static IntMat identity(int n) {
        IntMat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    mpz_class& at(int i, int j) { return a_[idx(i, j)]; }
    const mpz_class& at(int i, int j) const { return a_[idx(i, j)]; }

    friend IntMat operator*(const IntMat& lhs, const IntMat& rhs) {
        if (lhs.n_ != rhs.n_) throw std::invalid_argument("IntMat: size mismatch");
        const int n = lhs.n_;
        IntMat out(n);
        mpz_class acc;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const mpz_class& f = lhs.at(i, k);
                if (f == 0) continue;
                for (int j = 0; j < n; ++j) {
                    acc = f * rhs.at(k, j);
                    out.at(i, j) += acc;
                }
            }
        return out;
    }

    friend bool operator==(const IntMat& lhs, const IntMat& rhs) {
        return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
    }
    friend bool operator!=(const IntMat& lhs, const IntMat& rhs) { return !(lhs == rhs); }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_minus_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? -1 : 0)) return false;
        return true;
    }

    IntMat transposed() const {
        IntMat out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<mpz_class> a_;
};

// The standard skew form: J is block-diagonal with [[0,1],[-1,0]] per handle.
inline IntMat sympl_J(int g) {
    IntMat J(2 * g);
    for (int i = 0; i < g; ++i) {
        J.at(2 * i, 2 * i + 1) = 1;
        J.at(2 * i + 1, 2 * i) = -1;
    }
    return J;
}

// J * c as a vector, avoiding a matrix product.
inline Vec j_times(const Vec& c) {
    const std::size_t n = c.size();
    if (n % 2 != 0) throw std::invalid_argument("j_times: odd-length vector");
    Vec out(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        out[i] = c[i + 1];
        out[i + 1] = -c[i];
    }
    return out;
}

// <x, y> = x^T J y.
inline mpz_class sympl_pairing(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("sympl_pairing: length mismatch");
    const Vec jy = j_times(y);
    mpz_class acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * jy[i];
    return acc;
}

inline bool preserves_form(const IntMat& m) {
    const int n = m.size();
    if (n % 2 != 0) return false;
    const IntMat J = sympl_J(n / 2);
    return m.transposed() * J * m == J;
}

// Homology classes of the standard chain curves c_1 .. c_{2g+1} on the closed
// genus-g surface: c_{2j-1} = a_j for j <= g, c_{2g+1} = -(a_1 + ... + a_g),
// c_{2j} = b_j - b_{j+1} with b_{g+1} = 0 (so c_{2g} = b_g).
inline std::vector<Vec> chain_classes(int g) {
    if (g < 1) throw std::invalid_argument("chain_classes: genus must be >= 1");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(2 * g + 1));
    for (int idx = 1; idx <= 2 * g + 1; ++idx) {
        Vec v(static_cast<std::size_t>(2 * g));
        if (idx % 2 == 1) {
            const int j = (idx + 1) / 2;
            if (j <= g) {
                v[static_cast<std::size_t>(2 * (j - 1))] = 1;
            } else {
                for (int t = 0; t < g; ++t) v[static_cast<std::size_t>(2 * t)] = -1;
            }
        } else {
            const int j = idx / 2;
            v[static_cast<std::size_t>(2 * (j - 1) + 1)] = 1;
            if (j + 1 <= g) v[static_cast<std::size_t>(2 * j + 1)] = -1;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// A right-handed Dehn twist about a curve of class c acts on homology as the
// transvection x -> x + <x, c> c; sign -1 gives the inverse twist. In matrix
// form (column-vector convention) M = I + sign * c * (J c)^T.
inline IntMat transvection(const Vec& c, int sign = 1) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("transvection: sign must be +-1");
    const int n = static_cast<int>(c.size());
    const Vec jc = j_times(c);
    IntMat m = IntMat::identity(n);
    for (int i = 0; i < n; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j)
            m.at(i, j) += sign * c[static_cast<std::size_t>(i)] * jc[static_cast<std::size_t>(j)];
    }
    return m;
}

// A^{-1} = -J A^T J for A preserving the form (J^2 = -I).
inline IntMat sp_inverse(const IntMat& a) {
    const int n = a.size();
    if (n % 2 != 0) throw std::invalid_argument("sp_inverse: odd size");
    const IntMat J = sympl_J(n / 2);
    IntMat mJ(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mJ.at(i, j) = -J.at(i, j);
    return mJ * a.transposed() * J;
}

// One word letter at the homology level: a class with a twist power.
struct ClassLetter {
    Vec cls;
    int power = 1;  // +1 right-handed twist, -1 its inverse
};

// Image of a twist word under the symplectic representation. Matrices act on
// column vectors, so the word v_1 v_2 ... v_N (applied left to right) maps to
// M(v_N) ... M(v_1).
inline IntMat sp_image_classes(const std::vector<ClassLetter>& letters, int g) {
    IntMat acc = IntMat::identity(2 * g);
    for (const ClassLetter& l : letters) {
        if (static_cast<int>(l.cls.size()) != 2 * g)
            throw std::invalid_argument("sp_image_classes: class length != 2g");
        acc = transvection(l.cls, l.power) * acc;
    }
    return acc;
}

}  // namespace pencil::sp
