#include "pchg/multimatrix.hpp"

#include <algorithm>
#include <thread>

namespace pchg {

namespace {

std::size_t checked_extent_product(const std::vector<int>& extents) {
    std::size_t total = 1;
    for (int e : extents) {
        if (e < 1) fail(errc::validation, "matrix extent must be positive");
        if (total > MultiMatrix::default_entry_guard / static_cast<std::size_t>(e))
            fail(errc::guard, "matrix exceeds the dense entry guard");
        total *= static_cast<std::size_t>(e);
    }
    return total;
}

} // namespace

MultiMatrix::MultiMatrix(int dim, int order) {
    if (dim < 1) fail(errc::validation, "matrix dimension must be at least 1");
    extents_.assign(static_cast<std::size_t>(dim), order);
    entries_.assign(checked_extent_product(extents_), Rational(0));
}

MultiMatrix::MultiMatrix(std::vector<int> extents) : extents_(std::move(extents)) {
    if (extents_.empty()) fail(errc::validation, "matrix dimension must be at least 1");
    entries_.assign(checked_extent_product(extents_), Rational(0));
}

bool MultiMatrix::cubical() const {
    return std::all_of(extents_.begin(), extents_.end(),
                       [&](int e) { return e == extents_.front(); });
}

int MultiMatrix::order() const {
    if (!cubical()) fail(errc::validation, "order is defined for cubical matrices only");
    return extents_.front();
}

std::size_t MultiMatrix::flat_index(const std::vector<int>& index) const {
    if (index.size() != extents_.size())
        fail(errc::validation, "index arity does not match matrix dimension");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] < 0 || index[i] >= extents_[i])
            fail(errc::validation, "matrix index out of range");
        flat = flat * static_cast<std::size_t>(extents_[i]) + static_cast<std::size_t>(index[i]);
    }
    return flat;
}

void MultiMatrix::unflatten(std::size_t flat, std::vector<int>& index) const {
    index.resize(extents_.size());
    for (std::size_t i = extents_.size(); i-- > 0;) {
        index[i] = static_cast<int>(flat % static_cast<std::size_t>(extents_[i]));
        flat /= static_cast<std::size_t>(extents_[i]);
    }
}

MultiMatrix identity_tensor(int dim, int order) {
    MultiMatrix id(dim, order);
    for (int v = 0; v < order; ++v) {
        std::size_t flat = 0;
        for (int axis = 0; axis < dim; ++axis)
            flat = flat * static_cast<std::size_t>(order) + static_cast<std::size_t>(v);
        id[flat] = Rational(1);
    }
    return id;
}

MultiMatrix mm_product(const MultiMatrix& a, const MultiMatrix& b, int threads) {
    const int d = a.dim();
    const int t = b.dim();
    const std::size_t inner = static_cast<std::size_t>(b.extent(0));
    for (int axis = 1; axis < d; ++axis)
        if (static_cast<std::size_t>(a.extent(axis)) != inner)
            fail(errc::validation, "product operands have mismatched extents");

    if (d == 1) return a; // no axes to contract

    // Result extents: first axis of a, then (d-1) copies of b's tail axes.
    std::vector<int> out_extents;
    out_extents.push_back(a.extent(0));
    for (int rep = 0; rep < d - 1; ++rep)
        for (int axis = 1; axis < t; ++axis) out_extents.push_back(b.extent(axis));
    MultiMatrix out(out_extents);

    const std::size_t rows = static_cast<std::size_t>(a.extent(0));
    const std::size_t a_cols = a.size() / rows;            // inner^(d-1)
    const std::size_t b_stride = b.size() / inner;         // one b row
    const std::size_t out_cols = out.size() / rows;        // b_stride^(d-1)

    // Digit tables: a-column -> (d-1) contraction indices; out-column -> (d-1)
    // positions within a b row.
    std::vector<std::vector<std::size_t>> a_digits(a_cols, std::vector<std::size_t>(d - 1));
    for (std::size_t m = 0; m < a_cols; ++m) {
        std::size_t rest = m;
        for (int j = d - 2; j >= 0; --j) {
            a_digits[m][static_cast<std::size_t>(j)] = rest % inner;
            rest /= inner;
        }
    }
    std::vector<std::vector<std::size_t>> out_digits(out_cols, std::vector<std::size_t>(d - 1));
    for (std::size_t c = 0; c < out_cols; ++c) {
        std::size_t rest = c;
        for (int j = d - 2; j >= 0; --j) {
            out_digits[c][static_cast<std::size_t>(j)] = rest % b_stride;
            rest /= b_stride;
        }
    }

    auto compute_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t i = row_begin; i < row_end; ++i) {
            for (std::size_t m = 0; m < a_cols; ++m) {
                const Rational& av = a[i * a_cols + m];
                if (av.is_zero()) continue;
                for (std::size_t c = 0; c < out_cols; ++c) {
                    Rational term = av;
                    for (int j = 0; j < d - 1; ++j) {
                        const std::size_t ij = a_digits[m][static_cast<std::size_t>(j)];
                        const std::size_t bj = out_digits[c][static_cast<std::size_t>(j)];
                        term *= b[ij * b_stride + bj];
                        if (term.is_zero()) break;
                    }
                    if (!term.is_zero()) out[i * out_cols + c] += term;
                }
            }
        }
    };

    if (threads <= 1 || rows < 2) {
        compute_rows(0, rows);
    } else {
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), rows);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = rows * w / workers;
            std::size_t end = rows * (w + 1) / workers;
            pool.emplace_back(compute_rows, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<Rational> apply_vector(const MultiMatrix& a, const std::vector<Rational>& x) {
    const int d = a.dim();
    for (int axis = 1; axis < d; ++axis)
        if (static_cast<std::size_t>(a.extent(axis)) != x.size())
            fail(errc::validation, "vector length does not match matrix order");
    const std::size_t rows = static_cast<std::size_t>(a.extent(0));
    const std::size_t a_cols = a.size() / rows;
    const std::size_t inner = x.size();

    std::vector<Rational> out(rows, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t m = 0; m < a_cols; ++m) {
            Rational term = a[i * a_cols + m];
            if (term.is_zero()) continue;
            std::size_t rest = m;
            for (int j = 0; j < d - 1; ++j) {
                term *= x[rest % inner];
                rest /= inner;
                if (term.is_zero()) break;
            }
            out[i] += term;
        }
    }
    return out;
}

bool is_symmetric(const MultiMatrix& a) {
    if (!a.cubical()) fail(errc::validation, "symmetry is defined for cubical matrices only");
    std::vector<int> index, sorted;
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
        a.unflatten(flat, index);
        sorted = index;
        std::sort(sorted.begin(), sorted.end());
        if (!(a[flat] == a.at(sorted))) return false;
    }
    return true;
}

Rational hyperplane_sum(const MultiMatrix& a, int axis, int fixed) {
    if (axis < 0 || axis >= a.dim()) fail(errc::validation, "hyperplane axis out of range");
    if (fixed < 0 || fixed >= a.extent(axis)) fail(errc::validation, "hyperplane index out of range");
    Rational sum(0);
    std::vector<int> index;
    for (std::size_t flat = 0; flat < a.size(); ++flat) {
        a.unflatten(flat, index);
        if (index[static_cast<std::size_t>(axis)] == fixed) sum += a[flat];
    }
    return sum;
}

MultiMatrix scalar_multiply(const Rational& factor, const MultiMatrix& a) {
    MultiMatrix out = a;
    for (std::size_t flat = 0; flat < out.size(); ++flat) out[flat] *= factor;
    return out;
}

MultiMatrix diagonal_matrix(const std::vector<long long>& diag) {
    const int k = static_cast<int>(diag.size());
    MultiMatrix out(2, k);
    for (int i = 0; i < k; ++i) out.at({i, i}) = Rational(diag[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace pchg
