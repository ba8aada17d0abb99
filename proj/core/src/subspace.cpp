#include "sqc/subspace.hpp"

#include "sqc/errors.hpp"

namespace sqc {

Subspace Subspace::span(const Matrix& generators) {
    Subspace s(generators.cols());
    s.basis_ = rref(generators);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Scalar>>& generators) {
    Matrix m(generators.size(), ambient_dim);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != ambient_dim)
            throw dimension_mismatch("generator length differs from ambient dimension");
        for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = generators[i][j];
    }
    return span(m);
}

std::vector<Scalar> Subspace::basis_vector(std::size_t i) const {
    std::vector<Scalar> v(ambient_dim_);
    for (std::size_t j = 0; j < ambient_dim_; ++j) v[j] = basis_.at(i, j);
    return v;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("subspace sum over different ambient spaces");
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j)
            stacked.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j)
            stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    return Subspace::span(stacked);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("subspace intersection over different ambient spaces");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: eliminate [[A, A], [B, 0]]; rows whose left block vanished
    // carry an intersection basis in their right block.
    Matrix block(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            block.at(a.dim() + i, j) = b.basis().at(i, j);
    const Matrix red = rref(block);
    std::vector<std::vector<Scalar>> inter;
    for (std::size_t i = 0; i < red.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            left_zero = red.at(i, j).is_zero();
        if (!left_zero) continue;
        std::vector<Scalar> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = red.at(i, n + j);
        inter.push_back(std::move(v));
    }
    return Subspace::span(n, inter);
}

bool subspace_contains(const Subspace& s, const std::vector<Scalar>& v) {
    if (v.size() != s.ambient_dim())
        throw dimension_mismatch("membership test over different ambient spaces");
    // Reduce v by the echelon basis; membership iff the residual vanishes.
    std::vector<Scalar> r = v;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t lead = 0;
        while (lead < s.ambient_dim() && s.basis().at(i, lead).is_zero()) ++lead;
        if (lead == s.ambient_dim()) continue;
        if (r[lead].is_zero()) continue;
        const Scalar f = r[lead];
        for (std::size_t j = lead; j < s.ambient_dim(); ++j)
            r[j] -= f * s.basis().at(i, j);
    }
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool subspace_contains_all(const Subspace& s, const Matrix& vs) {
    for (std::size_t i = 0; i < vs.rows(); ++i) {
        std::vector<Scalar> v(vs.cols());
        for (std::size_t j = 0; j < vs.cols(); ++j) v[j] = vs.at(i, j);
        if (!subspace_contains(s, v)) return false;
    }
    return true;
}

Subspace kernel(const Matrix& m) {
    const Matrix red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_col(red.rows());
    for (std::size_t i = 0; i < red.rows(); ++i) {
        std::size_t j = 0;
        while (j < n && red.at(i, j).is_zero()) ++j;
        pivot_col[i] = j;
        if (j < n) is_pivot[j] = true;
    }
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(n);
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < red.rows(); ++i)
            if (pivot_col[i] < n) v[pivot_col[i]] = -red.at(i, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

} // namespace sqc
