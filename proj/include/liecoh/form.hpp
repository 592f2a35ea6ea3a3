#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecoh/errors.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// A blade is an ascending index subset of {1,..,n} stored as a bit set
/// (index i <-> bit i-1). n <= 9 keeps every blade in one machine word and
/// every pair printable as two digits.
using Blade = std::uint32_t;

inline int grade_of(Blade b) { return std::popcount(b); }
inline Blade blade_of(std::initializer_list<int> idx) {
    Blade b = 0;
    for (int i : idx) b |= Blade(1) << (i - 1);
    return b;
}

/// Sign of merging two disjoint ascending blades: (-1)^{inversions}.
/// Returns 0 when they share an index.
inline int wedge_sign(Blade a, Blade b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Blade rest = a; rest;) {
        Blade low = rest & (~rest + 1);
        inversions += std::popcount(b & (low - 1));
        rest ^= low;
    }
    return inversions % 2 ? -1 : 1;
}

inline std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    for (int i = 1; b; ++i, b >>= 1)
        if (b & 1) out.push_back(i);
    return out;
}

/// Lexicographically ordered basis of grade-k blades in n ambient dimensions.
/// Fixed once here; every matrix in every module uses this order.
struct BladeBasis {
    int n = 0, k = 0;
    std::vector<Blade> blades;
    std::map<Blade, int> index;

    BladeBasis(int n_, int k_) : n(n_), k(k_) {
        std::vector<int> tuple(k);
        build(tuple, 0, 1);
        for (int i = 0; i < static_cast<int>(blades.size()); ++i) index[blades[i]] = i;
    }

    int size() const { return static_cast<int>(blades.size()); }

private:
    void build(std::vector<int>& tuple, int pos, int start) {
        if (pos == k) {
            Blade b = 0;
            for (int i : tuple) b |= Blade(1) << (i - 1);
            blades.push_back(b);
            return;
        }
        for (int i = start; i <= n - (k - pos - 1); ++i) {
            tuple[pos] = i;
            build(tuple, pos + 1, i + 1);
        }
    }
};

/// Element of the exterior algebra on the dual of an n-dimensional space:
/// a sparse blade -> coefficient map. Zero coefficients are never stored.
class Form {
public:
    Form() = default;
    explicit Form(int ambient) : ambient_(ambient) {}

    static Form zero(int ambient) { return Form(ambient); }

    static Form scalar(int ambient, const Rational& c) {
        Form f(ambient);
        f.add_term(0, c);
        return f;
    }

    static Form blade_form(int ambient, Blade b, const Rational& c = 1) {
        Form f(ambient);
        f.add_term(b, c);
        return f;
    }

    int ambient_dim() const { return ambient_; }
    const std::map<Blade, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Blade b, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_homogeneous(int k) const {
        for (const auto& [b, c] : terms_)
            if (grade_of(b) != k) return false;
        return true;
    }

    /// -1 when zero or mixed-grade, otherwise the common grade.
    int homogeneous_grade() const {
        if (terms_.empty()) return -1;
        int k = grade_of(terms_.begin()->first);
        return is_homogeneous(k) ? k : -1;
    }

    Form grade(int k) const {
        Form out(ambient_);
        for (const auto& [b, c] : terms_)
            if (grade_of(b) == k) out.add_term(b, c);
        return out;
    }

    Form& operator+=(const Form& o) {
        if (o.ambient_ != ambient_) throw AmbientMismatch();
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }

    Form operator-() const {
        Form out(ambient_);
        for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
        return out;
    }
    friend Form operator-(const Form& a, const Form& b) { return a + (-b); }

    friend Form operator*(const Rational& c, const Form& f) {
        Form out(f.ambient_);
        if (c == 0) return out;
        for (const auto& [b, x] : f.terms_) out.terms_.emplace(b, c * x);
        return out;
    }

    bool operator==(const Form& o) const { return ambient_ == o.ambient_ && terms_ == o.terms_; }

private:
    int ambient_ = 0;
    std::map<Blade, Rational> terms_;
};

/// Exterior product. Bilinear; blades sharing an index annihilate.
inline Form wedge(const Form& a, const Form& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
    Form out(a.ambient_dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            int s = wedge_sign(ba, bb);
            if (s) out.add_term(ba | bb, s > 0 ? ca * cb : -(ca * cb));
        }
    return out;
}

/// Interior product with the basis vector X_i: the antiderivation of degree -1
/// sending alpha_S to (-1)^{p-1} alpha_{S\{i}} when i sits at position p.
inline Form interior(int i, const Form& a) {
    if (i < 1 || i > a.ambient_dim()) throw IndexOutOfRange(i);
    Blade bit = Blade(1) << (i - 1);
    Form out(a.ambient_dim());
    for (const auto& [b, c] : a.terms()) {
        if (!(b & bit)) continue;
        int below = std::popcount(b & (bit - 1));
        out.add_term(b ^ bit, below % 2 ? -c : c);
    }
    return out;
}

/// Coordinates of the grade-k part in the lex blade basis; length C(n,k).
inline Vector grade_coordinates(const Form& a, int k) {
    BladeBasis basis(a.ambient_dim(), k);
    Vector v(basis.size(), Rational(0));
    for (const auto& [b, c] : a.terms())
        if (grade_of(b) == k) v[basis.index.at(b)] = c;
    return v;
}

inline Form form_from_coordinates(int ambient, int k, const Vector& v) {
    BladeBasis basis(ambient, k);
    if (static_cast<int>(v.size()) != basis.size()) throw AmbientMismatch();
    Form f(ambient);
    for (int i = 0; i < basis.size(); ++i) f.add_term(basis.blades[i], v[i]);
    return f;
}

/// Renders a form in the entry grammar, e.g. "1/2*16-23". Terms come out in
/// blade order (grade, then lex).
inline std::string form_to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Blade, Rational>> terms;
    for (int k = 0; k <= f.ambient_dim(); ++k) {
        BladeBasis basis(f.ambient_dim(), k);
        for (Blade b : basis.blades) {
            Rational c = f.coefficient(b);
            if (c != 0) terms.emplace_back(b, c);
        }
    }
    std::string s;
    for (const auto& [b, c] : terms) {
        std::string mag;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        std::string idx;
        for (int i : blade_indices(b)) idx += std::to_string(i);
        if (idx.empty()) idx = "1";  // scalar term prints as coefficient alone
        if (b == 0) mag = to_string(abs_c);
        else if (abs_c == 1) mag = idx;
        else mag = to_string(abs_c) + "*" + idx;
        if (c < 0) s += "-";
        else if (!s.empty()) s += "+";
        s += mag;
    }
    return s;
}

}  // namespace liecoh
