#pragma once

#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// The Chevalley-Eilenberg complex as matrices in the lex blade bases.
/// d[k] maps grade k to grade k+1, k = 0..n (d[n] has zero rows).
struct CochainComplex {
    LieAlgebra algebra;
    std::vector<Matrix> d;

    const Matrix& d_at(int k) const { return d[k]; }
};

inline CochainComplex build_complex(const LieAlgebra& g) {
    int n = g.dim();
    CochainComplex cx{g, {}};
    cx.d.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        BladeBasis dom(n, k);
        BladeBasis cod(n, k + 1 > n ? 0 : k + 1);
        int cod_size = k + 1 > n ? 0 : cod.size();
        Matrix m(cod_size, dom.size());
        for (int j = 0; j < dom.size(); ++j) {
            Form df = ce_d(g, Form::blade_form(n, dom.blades[j]));
            if (k + 1 > n) {
                if (!df.is_zero()) throw JacobiViolation(0);
                continue;
            }
            Vector coords = grade_coordinates(df, k + 1);
            for (int i = 0; i < cod_size; ++i) m(i, j) = coords[i];
        }
        cx.d.push_back(std::move(m));
    }
    for (int k = 0; k + 1 <= n; ++k)
        if (!(cx.d[k + 1] * cx.d[k]).is_zero()) throw JacobiViolation(k);
    return cx;
}

/// Exact Betti numbers with deterministic representative choices: in each
/// degree, cocycle basis rows are reduced against the coboundary space and the
/// survivors are kept verbatim as representatives.
struct BettiReport {
    std::vector<int> b;                    // b_0..b_n
    std::vector<Subspace> cocycles;        // ker d_k
    std::vector<Subspace> coboundaries;    // im d_{k-1}
    std::vector<std::vector<Form>> representatives;
};

inline BettiReport betti(const LieAlgebra& g) {
    CochainComplex cx = build_complex(g);
    int n = g.dim();
    BettiReport rep;
    for (int k = 0; k <= n; ++k) {
        Subspace z = kernel(cx.d[k]);
        Subspace b = k == 0 ? Subspace::zero(BladeBasis(n, 0).size()) : image(cx.d[k - 1]);
        rep.b.push_back(z.dim() - b.dim());

        std::vector<Form> reps;
        Subspace grown = b;
        for (int i = 0; i < z.dim(); ++i) {
            Vector v = z.basis_row(i);
            if (grown.contains(v)) continue;
            grown = sum(grown, Subspace::span_of({v}, z.ambient_dim()));
            reps.push_back(form_from_coordinates(n, k, v));
        }
        rep.cocycles.push_back(std::move(z));
        rep.coboundaries.push_back(std::move(b));
        rep.representatives.push_back(std::move(reps));
    }
    return rep;
}

/// Multi-moment eligibility: b_2 = b_3 = 0.
inline bool multi_moment_eligible(const LieAlgebra& g) {
    BettiReport r = betti(g);
    return r.b[2] == 0 && r.b[3] == 0;
}

}  // namespace liecoh
