#ifndef CENQUOT_MATRIX_HPP
#define CENQUOT_MATRIX_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "cenquot/term_ideal.hpp"

namespace cenquot {

template <class T>
class Mat {
  public:
    std::size_t n = 0;
    std::vector<T> e;  // row-major

    Mat() = default;
    explicit Mat(std::size_t size, const T& fill) : n(size), e(size * size, fill) {}

    static Mat from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        Mat m;
        m.n = rows.size();
        for (const auto& r : rows) {
            if (r.size() != m.n) throw error("matrix rows must be square");
            for (const auto& v : r) m.e.push_back(v);
        }
        return m;
    }

    T& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }

    bool operator==(const Mat& o) const {
        if (n != o.n) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!(e[i] == o.e[i])) return false;
        return true;
    }
};

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n) throw error("matrix shape mismatch");
    Mat<T> out;
    out.n = a.n;
    out.e.reserve(a.n * a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            T acc = a.at(i, 0) * b.at(0, j);
            for (std::size_t l = 1; l < a.n; ++l) acc = acc + a.at(i, l) * b.at(l, j);
            out.e.push_back(acc);
        }
    return out;
}

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n) throw error("matrix shape mismatch");
    Mat<T> out;
    out.n = a.n;
    out.e.reserve(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) out.e.push_back(a.e[i] + b.e[i]);
    return out;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
    if (a.n != b.n) throw error("matrix shape mismatch");
    Mat<T> out;
    out.n = a.n;
    out.e.reserve(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) out.e.push_back(a.e[i] - b.e[i]);
    return out;
}

using MatrixOverRing = Mat<UfdElement>;
using MatrixOverQuotient = Mat<Residue>;

inline MatrixOverQuotient project_matrix(const IdealHandle& I, const MatrixOverRing& m) {
    MatrixOverQuotient out;
    out.n = m.n;
    out.e.reserve(m.e.size());
    for (const auto& v : m.e) out.e.push_back(project(I, v));
    return out;
}

inline MatrixOverRing lift_matrix(const MatrixOverQuotient& m) {
    MatrixOverRing out;
    out.n = m.n;
    out.e.reserve(m.e.size());
    for (const auto& v : m.e) out.e.push_back(v.rep);
    return out;
}

template <class T>
bool commutes(const Mat<T>& a, const Mat<T>& b) {
    return a * b == b * a;
}

// (a-d, b, c) and (e-h, f, g); commutation of 2x2 matrices is exactly the
// vanishing cross product of these triples.
template <class T>
std::array<T, 3> commutation_triple(const Mat<T>& m) {
    if (m.n != 2) throw error("commutation triple needs a 2x2 matrix");
    return {m.at(0, 0) - m.at(1, 1), m.at(0, 1), m.at(1, 0)};
}

template <class T>
bool cross_conditions_commute(const Mat<T>& a, const Mat<T>& b) {
    auto ta = commutation_triple(a);
    auto tb = commutation_triple(b);
    auto zero = [](const T& v) { return v - v; };
    return ta[0] * tb[1] - ta[1] * tb[0] == zero(ta[0]) && ta[1] * tb[2] - ta[2] * tb[1] == zero(ta[0]) &&
           ta[2] * tb[0] - ta[0] * tb[2] == zero(ta[0]);
}

// ---- centralizer over the base UFD -----------------------------------------

// Data of the non-scalar case: the centralizer is { w*generator + v*identity }.
struct ReducedTriple {
    std::array<UfdElement, 3> triple;  // (e-h, f, g)
    MatrixOverRing shifted;            // [[e-h, f],[g, 0]]
    UfdElement triple_gcd;             // gcd of the triple
    MatrixOverRing generator;          // shifted / triple_gcd
};

struct CentralizerGens {
    bool scalar = false;  // centralizer is all of M_2(R)
    std::optional<ReducedTriple> reduced;
};

inline ReducedTriple reduce_triple(const std::array<UfdElement, 3>& t) {
    ReducedTriple out;
    out.triple = t;
    const RingDescriptor R = t[0].ring;
    UfdElement zero = UfdElement::zero(R);
    out.shifted = MatrixOverRing::from_rows({{t[0], t[1]}, {t[2], zero}});
    out.triple_gcd = gcd_many({t[0], t[1], t[2]});
    out.generator = MatrixOverRing::from_rows({{divide_exact(t[0], out.triple_gcd), divide_exact(t[1], out.triple_gcd)},
                                               {divide_exact(t[2], out.triple_gcd), zero}});
    return out;
}

inline CentralizerGens centralizer_generators(const MatrixOverRing& b) {
    if (b.n != 2) throw error("centralizer generators are 2x2 only");
    auto t = commutation_triple(b);
    CentralizerGens out;
    if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) {
        out.scalar = true;
        return out;
    }
    out.reduced = reduce_triple(t);
    return out;
}

}  // namespace cenquot

#endif
