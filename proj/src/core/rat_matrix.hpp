#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <cstddef>
#include <vector>

namespace thurston {

// Dense square matrix over exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool nonnegative() const {
        for (const auto& x : a_)
            if (x < 0) return false;
        return true;
    }

    RatMatrix operator*(const RatMatrix& rhs) const {
        RatMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Rational& aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    if (rhs.at(k, j) != 0) out.at(i, j) += aik * rhs.at(k, j);
            }
        return out;
    }

    std::vector<Rational> operator*(const std::vector<Rational>& v) const {
        std::vector<Rational> out(n_, Rational(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    RatMatrix pow(unsigned e) const {
        RatMatrix result = identity(n_);
        RatMatrix base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    // Principal submatrix on the given (ordered) index set.
    RatMatrix submatrix(const std::vector<std::size_t>& idx) const {
        RatMatrix out(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                out.at(i, j) = at(idx[i], idx[j]);
        return out;
    }

    bool operator==(const RatMatrix& rhs) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

// Sup norm of a vector: max_i |v_i|.
inline Rational max_norm(const std::vector<Rational>& v) {
    if (v.empty()) throw Error(ErrorKind::Argument, "max_norm: empty vector");
    Rational best = abs(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i) {
        Rational x = abs(v[i]);
        if (x > best) best = x;
    }
    return best;
}

// Operator norm induced by the sup norm: max absolute row sum.
inline Rational max_norm(const RatMatrix& m) {
    if (m.size() == 0) throw Error(ErrorKind::Argument, "max_norm: empty matrix");
    Rational best(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < m.size(); ++j) row += abs(m.at(i, j));
        if (row > best) best = row;
    }
    return best;
}

inline double max_norm(const std::vector<double>& v) {
    if (v.empty()) throw Error(ErrorKind::Argument, "max_norm: empty vector");
    double best = 0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

} // namespace thurston
