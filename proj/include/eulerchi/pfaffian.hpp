#pragma once

#include "eulerchi/error.hpp"
#include "eulerchi/ring.hpp"
#include "eulerchi/symcurv.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace eulerchi {

// Skew-symmetric n x n matrix over a commutative ring, stored by its
// strictly upper triangle.
template <class R>
class SkewMatrix {
public:
    explicit SkewMatrix(int n) : n_(n), upper_(static_cast<size_t>(n) * (n - 1) / 2, ring_from_int<R>(0)) {}

    int size() const { return n_; }

    void set(int i, int j, R v)
    {
        if (i == j && !ring_is_zero(v)) fail(errc::domain_error, "diagonal of a skew matrix is zero");
        if (i < j)
            upper_[index(i, j)] = std::move(v);
        else if (i > j)
            upper_[index(j, i)] = -std::move(v);
    }

    // full signed entry
    R at(int i, int j) const
    {
        if (i == j) return ring_from_int<R>(0);
        if (i < j) return upper_[index(i, j)];
        return -upper_[index(j, i)];
    }

private:
    int n_;
    std::vector<R> upper_;

    size_t index(int i, int j) const
    {
        return static_cast<size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<size_t>(j - i - 1);
    }
};

namespace detail {

template <class R>
R pfaffian_masked(const SkewMatrix<R>& x, uint32_t mask, std::map<uint32_t, R>& memo)
{
    if (mask == 0) return ring_from_int<R>(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    int first = 0;
    while (!(mask & (1u << first))) ++first;
    uint32_t rest = mask & ~(1u << first);

    // expansion along the first remaining row; consecutive live columns
    // alternate sign starting with +
    R acc = ring_from_int<R>(0);
    int parity = 0;
    for (int j = first + 1; j < x.size(); ++j) {
        if (!(rest & (1u << j))) continue;
        R term = x.at(first, j) * pfaffian_masked(x, rest & ~(1u << j), memo);
        acc = (parity % 2 == 0) ? acc + term : acc - term;
        ++parity;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace detail

// Pfaffian by the Laplace-style recurrence
//   Pf(X) = sum_{j=2}^{n} (-1)^j x_{1j} Pf(X^{1j}),
// memoized on index subsets. Pf of the empty matrix is 1.
template <class R>
R pfaffian_laplace(const SkewMatrix<R>& x)
{
    if (x.size() % 2 != 0) fail(errc::odd_dimension, "Pfaffian needs even dimension");
    std::map<uint32_t, R> memo;
    uint32_t full = x.size() == 32 ? 0xffffffffu : ((1u << x.size()) - 1u);
    return detail::pfaffian_masked(x, full, memo);
}

// Same expansion pivoted on an arbitrary row k (used to check that the
// result does not depend on the expansion row):
//   Pf(X) = sum_{j != k} (-1)^{k+j+1+[j<k]} x_{kj} Pf(X^{kj})
template <class R>
R pfaffian_laplace_on_row(const SkewMatrix<R>& x, int row, const std::vector<int>& live)
{
    if (live.empty()) return ring_from_int<R>(1);
    R acc = ring_from_int<R>(0);
    int k_pos = 0;
    while (live[static_cast<size_t>(k_pos)] != row) ++k_pos;
    for (size_t j_pos = 0; j_pos < live.size(); ++j_pos) {
        int j = live[j_pos];
        if (j == row) continue;
        std::vector<int> rest;
        for (int v : live)
            if (v != row && v != j) rest.push_back(v);
        int exponent = k_pos + static_cast<int>(j_pos) + 1 + (static_cast<int>(j_pos) < k_pos ? 1 : 0);
        R term = x.at(row, j) * pfaffian_laplace_on_row(x, rest.empty() ? -1 : rest.front(), rest);
        acc = (exponent % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <class R>
R pfaffian_laplace_on_row(const SkewMatrix<R>& x, int row)
{
    if (x.size() % 2 != 0) fail(errc::odd_dimension, "Pfaffian needs even dimension");
    std::vector<int> live;
    for (int i = 0; i < x.size(); ++i) live.push_back(i);
    return pfaffian_laplace_on_row(x, row, live);
}

// Determinant by fraction-free (Bareiss) elimination, used as the
// independent oracle behind Pf^2 = det.
template <class R>
R determinant(std::vector<std::vector<R>> m)
{
    size_t n = m.size();
    if (n == 0) return ring_from_int<R>(1);
    R prev = ring_from_int<R>(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(m[k][k])) {
            size_t swap_row = k + 1;
            while (swap_row < n && ring_is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return ring_from_int<R>(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = ring_from_int<R>(0);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <class R>
R determinant(const SkewMatrix<R>& x)
{
    std::vector<std::vector<R>> m(static_cast<size_t>(x.size()),
                                  std::vector<R>(static_cast<size_t>(x.size()), ring_from_int<R>(0)));
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = x.at(i, j);
    return determinant(std::move(m));
}

// Pf(X)^2 - det(X); identically zero.
template <class R>
R pfaffian_det_check(const SkewMatrix<R>& x)
{
    R pf = pfaffian_laplace(x);
    return pf * pf - determinant(x);
}

// Curvature 2-form matrix of a hypersurface in a space form: the (i, j)
// coefficient is c + lambda_i lambda_j on the 2-form e^{ij}.
template <class R>
struct CurvatureMatrix {
    R c;
    std::vector<R> eigenvalues;

    int size() const { return static_cast<int>(eigenvalues.size()); }

    R coefficient(int i, int j) const
    {
        return c + eigenvalues[static_cast<size_t>(i)] * eigenvalues[static_cast<size_t>(j)];
    }

    SkewMatrix<R> coefficient_matrix() const
    {
        SkewMatrix<R> m(size());
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j) m.set(i, j, coefficient(i, j));
        return m;
    }
};

namespace detail {

template <class R>
R matching_sum_masked(const CurvatureMatrix<R>& mat, uint32_t mask, std::map<uint32_t, R>& memo)
{
    if (mask == 0) return ring_from_int<R>(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    int first = 0;
    while (!(mask & (1u << first))) ++first;
    uint32_t rest = mask & ~(1u << first);

    R acc = ring_from_int<R>(0);
    for (int j = first + 1; j < mat.size(); ++j) {
        if (!(rest & (1u << j))) continue;
        acc = acc + mat.coefficient(first, j) * matching_sum_masked(mat, rest & ~(1u << j), memo);
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace detail

// Coefficient of the volume form in the Pfaffian of the curvature
// matrix: the sum over perfect matchings of prod (c + lambda_i lambda_j)
// with all plus signs. The Pfaffian sign of each matching cancels against
// the sign of reordering the wedge product e^{s(1)s(2)} ... e^{s(n-1)s(n)}
// into e^{1...n}, which is why no signs appear here.
template <class R>
R curvature_pfaffian(const CurvatureMatrix<R>& mat)
{
    if (mat.size() % 2 != 0) fail(errc::odd_dimension, "curvature Pfaffian needs even dimension");
    std::map<uint32_t, R> memo;
    uint32_t full = (1u << mat.size()) - 1u;
    return detail::matching_sum_masked(mat, full, memo);
}

// Element of the even exterior algebra on n generators: a map from the
// index set of each basis form e^{S} to its coefficient.
template <class R>
using EvenForm = std::map<uint32_t, R>;

namespace detail {

inline int merge_sign(uint32_t a, uint32_t b)
{
    // sign of sorting the concatenation (a ascending, then b ascending)
    int inversions = 0;
    for (int i = 0; i < 32; ++i) {
        if (!(b & (1u << i))) continue;
        uint32_t higher_in_a = a >> (i + 1);
        inversions += __builtin_popcount(higher_in_a);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

template <class R>
EvenForm<R> wedge(const EvenForm<R>& x, const EvenForm<R>& y)
{
    EvenForm<R> out;
    for (const auto& [sa, ca] : x) {
        for (const auto& [sb, cb] : y) {
            if (sa & sb) continue;
            int s = merge_sign(sa, sb);
            R term = ca * cb;
            if (s < 0) term = -term;
            auto [it, inserted] = out.emplace(sa | sb, term);
            if (!inserted) it->second = it->second + term;
        }
    }
    return out;
}

template <class R>
EvenForm<R> form_pfaffian_masked(const CurvatureMatrix<R>& mat, uint32_t mask)
{
    EvenForm<R> out;
    if (mask == 0) {
        out.emplace(0u, ring_from_int<R>(1));
        return out;
    }
    int first = 0;
    while (!(mask & (1u << first))) ++first;
    uint32_t rest = mask & ~(1u << first);

    int parity = 0;
    for (int j = first + 1; j < mat.size(); ++j) {
        if (!(rest & (1u << j))) continue;
        EvenForm<R> entry;
        entry.emplace((1u << first) | (1u << j), mat.coefficient(first, j));
        EvenForm<R> sub = wedge(entry, form_pfaffian_masked(mat, rest & ~(1u << j)));
        for (auto& [s, c] : sub) {
            if (parity % 2 != 0) c = -c;
            auto [it, inserted] = out.emplace(s, c);
            if (!inserted) it->second = it->second + c;
        }
        ++parity;
    }
    return out;
}

} // namespace detail

// Literal exterior-algebra evaluation of the Laplace recurrence with the
// entries kept as basis-indexed 2-forms; returns the coefficient of
// e^{1...n}. Independent witness that the unsigned matching sum above is
// the right coefficient.
template <class R>
R even_form_oracle(const CurvatureMatrix<R>& mat)
{
    if (mat.size() % 2 != 0) fail(errc::odd_dimension, "even-form oracle needs even dimension");
    if (mat.size() > 8) fail(errc::dimension_too_large, "even-form oracle is limited to n <= 8");
    uint32_t full = (1u << mat.size()) - 1u;
    EvenForm<R> pf = detail::form_pfaffian_masked(mat, full);
    auto it = pf.find(full);
    return it == pf.end() ? ring_from_int<R>(0) : it->second;
}

} // namespace eulerchi
