#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "halg/scalar.hpp"

namespace halg {

// Dense square matrix over the coefficient field; dimensions in this
// project are 4, 8 or 16.
template <ScalarField S>
class RepMatrix {
public:
    using Scalar = S;

    RepMatrix() = default;
    explicit RepMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, S{0}) {}
    RepMatrix(std::size_t dim, std::vector<S> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (entries_.size() != dim_ * dim_)
            throw std::invalid_argument("RepMatrix: entry count does not match dimension");
    }
    RepMatrix(std::size_t dim, std::initializer_list<int> entries) : RepMatrix(dim) {
        if (entries.size() != dim * dim)
            throw std::invalid_argument("RepMatrix: entry count does not match dimension");
        std::size_t k = 0;
        for (int v : entries) entries_[k++] = S{v};
    }

    static RepMatrix identity(std::size_t dim) {
        RepMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = S{1};
        return m;
    }

    static RepMatrix diagonal(std::vector<S> d) {
        RepMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = std::move(d[i]);
        return m;
    }

    // (TL TR; BL BR), all blocks square of equal dimension.
    static RepMatrix from_blocks(const RepMatrix& tl, const RepMatrix& tr,
                                 const RepMatrix& bl, const RepMatrix& br) {
        const std::size_t h = tl.dim();
        if (tr.dim() != h || bl.dim() != h || br.dim() != h)
            throw std::invalid_argument("RepMatrix: block dimensions differ");
        RepMatrix m(2 * h);
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = 0; j < h; ++j) {
                m.at(i, j) = tl.at(i, j);
                m.at(i, j + h) = tr.at(i, j);
                m.at(i + h, j) = bl.at(i, j);
                m.at(i + h, j + h) = br.at(i, j);
            }
        }
        return m;
    }

    std::size_t dim() const { return dim_; }
    S& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<S>& entries() const { return entries_; }

    RepMatrix transpose() const {
        RepMatrix m(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend bool operator==(const RepMatrix& a, const RepMatrix& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<S> entries_;
};

template <ScalarField S>
RepMatrix<S> operator+(const RepMatrix<S>& a, const RepMatrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("RepMatrix: dimension mismatch");
    RepMatrix<S> m(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

template <ScalarField S>
RepMatrix<S> operator-(const RepMatrix<S>& a, const RepMatrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("RepMatrix: dimension mismatch");
    RepMatrix<S> m(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

template <ScalarField S>
RepMatrix<S> operator-(const RepMatrix<S>& a) {
    RepMatrix<S> m(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = -a.at(i, j);
    return m;
}

template <ScalarField S>
RepMatrix<S> operator*(const RepMatrix<S>& a, const RepMatrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("RepMatrix: dimension mismatch");
    const std::size_t n = a.dim();
    RepMatrix<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const S& aik = a.at(i, k);
            if (aik == S{0}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.at(k, j) == S{0}) continue;
                m.at(i, j) = m.at(i, j) + aik * b.at(k, j);
            }
        }
    }
    return m;
}

// Coefficient column of an element; length 8 for a real octonion, 16 for
// a complex octonion (real part stacked over imaginary part).
template <ScalarField S>
class VecRep {
public:
    VecRep() = default;
    explicit VecRep(std::vector<S> entries) : entries_(std::move(entries)) {}

    std::size_t length() const { return entries_.size(); }
    S& operator[](std::size_t i) { return entries_[i]; }
    const S& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<S>& entries() const { return entries_; }

    friend bool operator==(const VecRep& a, const VecRep& b) = default;

private:
    std::vector<S> entries_;
};

template <ScalarField S>
VecRep<S> operator*(const RepMatrix<S>& m, const VecRep<S>& v) {
    if (m.dim() != v.length()) throw std::invalid_argument("RepMatrix: vector length mismatch");
    std::vector<S> out(m.dim(), S{0});
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i] = out[i] + m.at(i, j) * v[j];
    return VecRep<S>(std::move(out));
}

}  // namespace halg
