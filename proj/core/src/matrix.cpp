#include "eulermat/matrix.hpp"

#include <stdexcept>

namespace eulermat {

Mat Mat::identity(int order) {
    Mat m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = BiPoly(Rational(1L));
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("Mat: order mismatch in product");
    Mat r(a.order_);
    for (int i = 0; i < a.order_; ++i)
        for (int k = 0; k < a.order_; ++k) {
            const BiPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.order_; ++j) {
                const BiPoly& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("Mat: order mismatch in sum");
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("Mat: order mismatch in difference");
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

Mat Mat::scaled(const Rational& c) const {
    Mat r(order_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
    return r;
}

Mat Mat::pow(unsigned k) const {
    Mat r = identity(order_);
    Mat base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Mat Mat::inverse_unit_lower() const {
    if (!is_unit_lower_triangular())
        throw std::domain_error("inverse_unit_lower: matrix is not unit lower triangular");
    // Column-wise forward substitution: B with A*B = I,
    // b_{i,j} = -sum_{k=j..i-1} a_{i,k} b_{k,j} for i > j.
    Mat b(order_);
    for (int j = 0; j < order_; ++j) {
        b.at(j, j) = BiPoly(Rational(1L));
        for (int i = j + 1; i < order_; ++i) {
            BiPoly s;
            for (int k = j; k < i; ++k) s += at(i, k) * b.at(k, j);
            b.at(i, j) = -s;
        }
    }
    return b;
}

Mat Mat::transpose() const {
    Mat r(order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::d_dx() const {
    Mat r(order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) r.at(i, j) = at(i, j).derivative_x();
    return r;
}

Mat Mat::substitute(const std::optional<Rational>& x_val,
                    const std::optional<Rational>& alpha_val) const {
    Mat r(order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) r.at(i, j) = at(i, j).eval(x_val, alpha_val);
    return r;
}

Mat Mat::substitute_x_poly(const BiPoly& s) const {
    Mat r(order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) r.at(i, j) = at(i, j).substitute_x(s);
    return r;
}

Mat Mat::direct_sum(const Mat& b) const {
    Mat r(order_ + b.order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < b.order_; ++i)
        for (int j = 0; j < b.order_; ++j) r.at(order_ + i, order_ + j) = b.at(i, j);
    return r;
}

bool Mat::is_unit_lower_triangular() const {
    const BiPoly one(Rational(1L));
    for (int i = 0; i < order_; ++i) {
        if (at(i, i) != one) return false;
        for (int j = i + 1; j < order_; ++j)
            if (!at(i, j).is_zero()) return false;
    }
    return true;
}

}  // namespace eulermat
