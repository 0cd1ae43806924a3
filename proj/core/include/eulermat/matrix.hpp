#pragma once

#include <optional>
#include <vector>

#include "eulermat/bipoly.hpp"

namespace eulermat {

// Dense square matrix over Q[x, alpha]. Equality is entrywise canonical
// equality; there is no tolerance anywhere.
class Mat {
public:
    explicit Mat(int order) : order_(order), e_(static_cast<std::size_t>(order) * order) {
        if (order < 1) throw std::invalid_argument("Mat: order must be >= 1");
    }

    static Mat identity(int order);

    int order() const { return order_; }
    BiPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * order_ + j]; }
    const BiPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * order_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.order_ == b.order_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    Mat scaled(const Rational& c) const;

    Mat pow(unsigned k) const;

    // Exact inverse by forward substitution; rejects input that is not
    // lower triangular with unit diagonal.
    Mat inverse_unit_lower() const;

    Mat transpose() const;
    Mat d_dx() const;
    Mat substitute(const std::optional<Rational>& x_val,
                   const std::optional<Rational>& alpha_val) const;
    Mat substitute_x_poly(const BiPoly& s) const;

    Mat direct_sum(const Mat& b) const;

    bool is_unit_lower_triangular() const;

private:
    int order_;
    std::vector<BiPoly> e_;
};

}  // namespace eulermat
