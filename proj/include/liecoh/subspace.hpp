#pragma once

#include <vector>

#include "liecoh/matrix.hpp"

namespace liecoh {

/// Linear subspace of Q^ambient in canonical form: the basis matrix is the
/// RREF of any spanning set, with zero rows dropped. Two subspaces are equal
/// as sets iff their canonical bases are identical, so operator== is exact
/// set equality.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(int ambient) { return Subspace(ambient); }

    static Subspace full(int ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix::identity(ambient);
        return s;
    }

    /// Canonicalizes the row span of `rows`.
    static Subspace span_of(const Matrix& rows, int ambient) {
        if (rows.cols() != ambient) throw AmbientMismatch();
        RrefResult rr = rref(rows);
        Subspace s(ambient);
        Matrix b(rr.rank, ambient);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < ambient; ++j) b(i, j) = rr.reduced(i, j);
        s.basis_ = std::move(b);
        return s;
    }

    static Subspace span_of(const std::vector<Vector>& rows, int ambient) {
        if (rows.empty()) return zero(ambient);
        return span_of(Matrix::from_rows(rows), ambient);
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_row(int i) const { return basis_.row(i); }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    /// Exact membership test by reduction against the RREF basis.
    bool contains(const Vector& v) const {
        if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatch();
        Vector r = v;
        for (int i = 0; i < basis_.rows(); ++i) {
            int p = pivot_col(i);
            if (r[p] == 0) continue;
            Rational f = r[p];
            for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
        }
        for (const auto& x : r)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw AmbientMismatch();
        for (int i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_row(i))) return false;
        return true;
    }

private:
    int pivot_col(int row) const {
        for (int j = 0; j < ambient_; ++j)
            if (basis_(row, j) != 0) return j;
        throw Error("zero row in canonical basis");
    }

    int ambient_ = 0;
    Matrix basis_{0, 0};
};

/// Null space of m, canonical. dim = cols - rank.
inline Subspace kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, n);
}

/// Column span of m as a subspace of Q^rows.
inline Subspace image(const Matrix& m) { return Subspace::span_of(m.transposed(), m.rows()); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.ambient_dim(); ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
    return Subspace::span_of(stacked, a.ambient_dim());
}

/// Intersection via the kernel of [A^T | -B^T]: x = A^T u = B^T w.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
    int n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    Matrix sys(n, a.dim() + b.dim());
    for (int i = 0; i < n; ++i) {
        for (int u = 0; u < a.dim(); ++u) sys(i, u) = a.basis()(u, i);
        for (int w = 0; w < b.dim(); ++w) sys(i, a.dim() + w) = -b.basis()(w, i);
    }
    Subspace ker = kernel(sys);
    std::vector<Vector> rows;
    for (int r = 0; r < ker.dim(); ++r) {
        Vector uw = ker.basis_row(r);
        Vector x(n, Rational(0));
        for (int u = 0; u < a.dim(); ++u)
            if (uw[u] != 0)
                for (int j = 0; j < n; ++j) x[j] += uw[u] * a.basis()(u, j);
        rows.push_back(std::move(x));
    }
    return Subspace::span_of(rows, n);
}

struct QuotientMapRank {
    int rank = 0;
    bool is_iso = false;
};

/// Rank of the map induced by `map` between the quotients
/// dom_cycles/dom_boundaries -> cod_cycles/cod_boundaries, plus whether it is
/// an isomorphism. The nesting and chain-map compatibility preconditions are
/// checked and violations throw.
inline QuotientMapRank quotient_map_rank(const Matrix& map, const Subspace& dom_cycles,
                                         const Subspace& dom_boundaries, const Subspace& cod_cycles,
                                         const Subspace& cod_boundaries) {
    if (map.cols() != dom_cycles.ambient_dim() || map.rows() != cod_cycles.ambient_dim())
        throw AmbientMismatch();
    if (!dom_cycles.contains(dom_boundaries)) throw NotNested("domain");
    if (!cod_cycles.contains(cod_boundaries)) throw NotNested("codomain");

    std::vector<Vector> images;
    for (int i = 0; i < dom_cycles.dim(); ++i) {
        Vector img = map.apply(dom_cycles.basis_row(i));
        if (!cod_cycles.contains(img)) throw NotChainMap("image of a cycle is not a cycle");
        images.push_back(std::move(img));
    }
    for (int i = 0; i < dom_boundaries.dim(); ++i) {
        Vector img = map.apply(dom_boundaries.basis_row(i));
        if (!cod_boundaries.contains(img)) throw NotChainMap("image of a boundary is not a boundary");
    }

    Subspace hit = sum(Subspace::span_of(images, cod_cycles.ambient_dim()), cod_boundaries);
    QuotientMapRank out;
    out.rank = hit.dim() - cod_boundaries.dim();
    int dom_q = dom_cycles.dim() - dom_boundaries.dim();
    int cod_q = cod_cycles.dim() - cod_boundaries.dim();
    out.is_iso = out.rank == dom_q && out.rank == cod_q;
    return out;
}

}  // namespace liecoh
