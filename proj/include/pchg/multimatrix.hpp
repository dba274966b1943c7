#pragma once

#include <cstddef>
#include <vector>

#include "pchg/rational.hpp"

namespace pchg {

// Dense multidimensional matrix over exact rationals, row-major over the
// index tuple (alpha_1, ..., alpha_d). Cubical instances (every axis of
// extent n) are the d-dimensional matrices of order n; rectangular instances
// arise as color matrices and as products with them.
class MultiMatrix {
public:
    static constexpr std::size_t default_entry_guard = 100'000'000;

    MultiMatrix() = default;
    MultiMatrix(int dim, int order);
    explicit MultiMatrix(std::vector<int> extents);

    int dim() const { return static_cast<int>(extents_.size()); }
    int extent(int axis) const { return extents_[static_cast<std::size_t>(axis)]; }
    const std::vector<int>& extents() const { return extents_; }
    bool cubical() const;
    int order() const; // requires cubical

    std::size_t size() const { return entries_.size(); }
    const std::vector<Rational>& entries() const { return entries_; }

    Rational& operator[](std::size_t flat) { return entries_[flat]; }
    const Rational& operator[](std::size_t flat) const { return entries_[flat]; }

    Rational& at(const std::vector<int>& index) { return entries_[flat_index(index)]; }
    const Rational& at(const std::vector<int>& index) const { return entries_[flat_index(index)]; }

    std::size_t flat_index(const std::vector<int>& index) const;
    void unflatten(std::size_t flat, std::vector<int>& index) const;

    friend bool operator==(const MultiMatrix& a, const MultiMatrix& b) = default;

private:
    std::vector<int> extents_;
    std::vector<Rational> entries_;
};

// d-dimensional identity of order n: 1 on constant index tuples, 0 elsewhere.
MultiMatrix identity_tensor(int dim, int order);

// Multidimensional product A ∘ B: contracts axes 2..d of A against the first
// axis of B, giving a ((d-1)(t-1)+1)-dimensional result. For two 2-dimensional
// operands this is the ordinary matrix product.
MultiMatrix mm_product(const MultiMatrix& a, const MultiMatrix& b, int threads = 1);

// A ∘ x for a vector x; component i is sum over (i2..id) of
// a[i,i2..id] * x[i2] * ... * x[id].
std::vector<Rational> apply_vector(const MultiMatrix& a, const std::vector<Rational>& x);

// True iff entries are invariant under every permutation of axis positions.
bool is_symmetric(const MultiMatrix& a);

// Sum of all entries whose index component along `axis` (0-based) equals
// `fixed`.
Rational hyperplane_sum(const MultiMatrix& a, int axis, int fixed);

MultiMatrix scalar_multiply(const Rational& factor, const MultiMatrix& a);

// k x k diagonal matrix with the given entries.
MultiMatrix diagonal_matrix(const std::vector<long long>& diag);

} // namespace pchg
