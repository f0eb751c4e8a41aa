#pragma once

// Exact truncated power series and the counting results built on them:
// the W and V fixed-point systems, the girth-constrained face-degree
// series F_d and E_b, the annular series G and B, and closed formulas
// for loopless, bipartite, and simple bipartite maps.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace mapgirth {

// Multivariate power series with arbitrary-precision integer coefficients,
// truncated by total degree. Variables carry integer labels (the face
// degrees they mark; a single label stands for t). Exponent tuples are
// dense over the label list; zero coefficients are never stored.
class TruncatedSeries {
  public:
    TruncatedSeries(std::vector<int> labels, int bound)
        : labels_(std::move(labels)), bound_(bound) {
        check(bound_ >= 0, "series bound must be non-negative");
        check(std::is_sorted(labels_.begin(), labels_.end()) &&
                  std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end(),
              "variable labels must be strictly increasing");
    }

    static TruncatedSeries constant(const std::vector<int>& labels, int bound, Int c) {
        TruncatedSeries s(labels, bound);
        if (c != 0) s.terms_[std::vector<int>(labels.size(), 0)] = std::move(c);
        return s;
    }
    static TruncatedSeries one(const std::vector<int>& labels, int bound) {
        return constant(labels, bound, 1);
    }
    static TruncatedSeries variable(const std::vector<int>& labels, int bound, int label) {
        TruncatedSeries s(labels, bound);
        int i = s.index_of(label);
        if (bound >= 1) {
            std::vector<int> e(labels.size(), 0);
            e[i] = 1;
            s.terms_[e] = 1;
        }
        return s;
    }

    const std::vector<int>& labels() const { return labels_; }
    int bound() const { return bound_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    Int coeff(const std::vector<int>& exps) const {
        check(exps.size() == labels_.size(), "exponent tuple has wrong arity");
        auto it = terms_.find(exps);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int constant_coeff() const { return coeff(std::vector<int>(labels_.size(), 0)); }

    TruncatedSeries zero_like() const { return TruncatedSeries(labels_, bound_); }
    TruncatedSeries one_like() const { return one(labels_, bound_); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.labels_ == b.labels_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (const auto& [e, c] : o.terms_) {
            Int& slot = terms_[e];
            slot += c;
            if (slot == 0) terms_.erase(e);
        }
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (const auto& [e, c] : o.terms_) {
            Int& slot = terms_[e];
            slot -= c;
            if (slot == 0) terms_.erase(e);
        }
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a -= b;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_shape(b);
        TruncatedSeries r(a.labels_, a.bound_);
        const size_t n = a.labels_.size();
        std::vector<int> e(n);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                int total = 0;
                for (size_t i = 0; i < n; ++i) {
                    e[i] = ea[i] + eb[i];
                    total += e[i];
                }
                if (total > a.bound_) continue;
                Int& slot = r.terms_[e];
                slot += ca * cb;
                if (slot == 0) r.terms_.erase(e);
            }
        return r;
    }
    friend TruncatedSeries operator*(const Int& k, const TruncatedSeries& a) {
        TruncatedSeries r(a.labels_, a.bound_);
        if (k == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = k * c;
        return r;
    }

    TruncatedSeries pow(int k) const {
        check(k >= 0, "series power must be non-negative");
        TruncatedSeries r = one_like();
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // Multiply by the variable with the given label.
    TruncatedSeries shifted_by(int label) const {
        TruncatedSeries r(labels_, bound_);
        int i = index_of(label);
        for (const auto& [e, c] : terms_) {
            int total = 0;
            for (int x : e) total += x;
            if (total + 1 > bound_) continue;
            std::vector<int> f = e;
            ++f[i];
            r.terms_[f] = c;
        }
        return r;
    }

    TruncatedSeries divided_exact(const Int& k, const char* what) const {
        TruncatedSeries r(labels_, bound_);
        for (const auto& [e, c] : terms_) r.terms_[e] = exact_div(c, k, what);
        return r;
    }

    void assert_nonneg(const char* what) const {
        for (const auto& [e, c] : terms_)
            check(c >= 0, what);
    }

  private:
    int index_of(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        check(it != labels_.end() && *it == label, "unknown variable label");
        return static_cast<int>(it - labels_.begin());
    }
    void require_same_shape(const TruncatedSeries& o) const {
        check(labels_ == o.labels_ && bound_ == o.bound_,
              "series operands have different variables or bounds");
    }

    std::vector<int> labels_;
    int bound_;
    std::map<std::vector<int>, Int> terms_;
};

// Map a multivariate series to a univariate one by x_label := t^label,
// dropping terms beyond the t bound.
inline TruncatedSeries substitute_powers(const TruncatedSeries& s, int t_bound) {
    TruncatedSeries out({1}, t_bound);
    std::map<int, Int> acc;
    for (const auto& [e, c] : s.terms()) {
        long deg = 0;
        for (size_t i = 0; i < e.size(); ++i) deg += static_cast<long>(s.labels()[i]) * e[i];
        if (deg > t_bound) continue;
        acc[static_cast<int>(deg)] += c;
    }
    for (const auto& [d, c] : acc)
        if (c != 0) out += c * TruncatedSeries::variable({1}, t_bound, 1).pow(d);
    return out;
}

// Generating polynomial of integer compositions: h_j(w) sums, over the ways
// to write j as an ordered sum of parts, the product of the argument series
// indexed by the parts. Parts beyond the argument list contribute nothing.
inline TruncatedSeries h_poly(int j, const std::vector<TruncatedSeries>& args) {
    check(j >= 0, "h_poly index must be non-negative");
    check(!args.empty(), "h_poly needs at least one argument series");
    std::vector<TruncatedSeries> H;
    H.reserve(j + 1);
    H.push_back(args[0].one_like());
    for (int m = 1; m <= j; ++m) {
        TruncatedSeries s = args[0].zero_like();
        for (int i = 1; i <= m && i <= static_cast<int>(args.size()); ++i)
            s += args[i - 1] * H[m - i];
        H.push_back(std::move(s));
    }
    return H[j];
}

namespace detail {

// [u^{uexp}] (A + B u^{-1} + u^{-2})^n, with powers of A and B supplied:
// a down-steps of one and b of two must satisfy a + 2b = -uexp.
inline TruncatedSeries laurent_extract(int n, int uexp,
                                       const std::vector<TruncatedSeries>& apow,
                                       const std::vector<TruncatedSeries>& bpow) {
    TruncatedSeries r = apow[0].zero_like();
    if (-uexp < 0) return r;
    for (int b = 0; 2 * b <= -uexp; ++b) {
        int a = -uexp - 2 * b;
        if (a + b > n) continue;
        r += multinomial2(n, a, b) * (apow[n - a - b] * bpow[a]);
    }
    return r;
}

inline std::vector<TruncatedSeries> powers_up_to(const TruncatedSeries& s, int n) {
    std::vector<TruncatedSeries> p;
    p.reserve(n + 1);
    p.push_back(s.one_like());
    for (int i = 1; i <= n; ++i) p.push_back(p.back() * s);
    return p;
}

}  // namespace detail

// Solution of the girth-d system: W[j + 2] holds W_j for j in [-2 .. d],
// with W_{-2} = 1. Inner faces of degree i are marked by x_i.
struct WSystemSolution {
    int d = 0;
    std::vector<int> degrees;
    int bound = 0;
    std::vector<TruncatedSeries> W;

    const TruncatedSeries& at(int j) const {
        check(j >= -2 && j <= d, "W index out of range");
        return W[j + 2];
    }
};

inline WSystemSolution solve_W(int d, const std::vector<int>& degrees, int bound) {
    check(d >= 1, "girth parameter must be positive");
    check(std::is_sorted(degrees.begin(), degrees.end()) &&
              std::adjacent_find(degrees.begin(), degrees.end()) == degrees.end(),
          "active degrees must be strictly increasing");
    check(degrees.empty() || degrees.front() >= d,
          "active degrees must not fall below the girth");

    WSystemSolution sol;
    sol.d = d;
    sol.degrees = degrees;
    sol.bound = bound;
    TruncatedSeries zero(degrees, bound);
    sol.W.assign(d + 3, zero);
    sol.W[0] = zero.one_like();

    int imax = degrees.empty() ? 0 : degrees.back();
    // The one-part composition makes first-line entries depend on entries of
    // higher index at equal degree, so each sweep refreshes the integral line
    // first and then walks the composition line downward; every other
    // dependency loses at least one degree of total x-weight per step.
    auto sweep = [&]() {
        auto apow = detail::powers_up_to(zero.one_like() + sol.at(0), imax > 0 ? imax - 1 : 0);
        auto bpow = detail::powers_up_to(sol.at(-1), imax > 0 ? imax - 1 : 0);
        for (int j = d - 2; j <= d; ++j) {
            TruncatedSeries s = zero;
            for (int i : degrees)
                s += detail::laurent_extract(i - 1, j + 2 - i, apow, bpow).shifted_by(i);
            sol.W[j + 2] = std::move(s);
        }
        // Refresh the arguments at every step: the one-part composition makes
        // each entry depend on the entry two higher at equal degree.
        for (int j = d - 3; j >= -1; --j) {
            std::vector<TruncatedSeries> args(sol.W.begin() + 3, sol.W.begin() + 2 + d);
            sol.W[j + 2] = h_poly(j + 2, args);
        }
    };
    for (int pass = 0; pass <= bound; ++pass) sweep();

    // Fixed-point residuals must vanish exactly.
    std::vector<TruncatedSeries> frozen = sol.W;
    sweep();
    check(frozen == sol.W, "W system failed to stabilize within the degree bound");
    for (int j = -1; j <= d; ++j) {
        check(sol.at(j).constant_coeff() == 0, "W series has a spurious constant term");
        sol.at(j).assert_nonneg("W series coefficient went negative");
    }
    if (d > 1) check(sol.at(-1) == sol.at(1), "low and high unit entries disagree");
    return sol;
}

inline TruncatedSeries series_from_W(const WSystemSolution& w) {
    TruncatedSeries f = w.at(w.d - 2);
    for (int j = -2; j <= w.d - 3; ++j) f -= w.at(j) * w.at(w.d - 2 - j);
    f.assert_nonneg("face-degree series coefficient went negative");
    return f;
}

// Generating function of rooted maps of girth d with root face of degree d;
// x_i marks the inner faces of degree i.
inline TruncatedSeries F_series(int d, const std::vector<int>& degrees, int bound) {
    return series_from_W(solve_W(d, degrees, bound));
}

// The same system under x_i := t^i, so t marks half-edges. The active
// degrees are d..bound; higher ones cannot contribute below the bound.
struct WHalfEdgeSolution {
    int d = 0;
    int bound = 0;
    std::vector<TruncatedSeries> W;

    const TruncatedSeries& at(int j) const {
        check(j >= -2 && j <= d, "W index out of range");
        return W[j + 2];
    }
};

inline WHalfEdgeSolution solve_W_half_edges(int d, int bound) {
    check(d >= 1, "girth parameter must be positive");
    WHalfEdgeSolution sol;
    sol.d = d;
    sol.bound = bound;
    TruncatedSeries zero({1}, bound);
    TruncatedSeries t = TruncatedSeries::variable({1}, bound, 1);
    sol.W.assign(d + 3, zero);
    sol.W[0] = zero.one_like();

    auto sweep = [&]() {
        auto apow = detail::powers_up_to(zero.one_like() + sol.at(0), bound > 0 ? bound - 1 : 0);
        auto bpow = detail::powers_up_to(sol.at(-1), bound > 0 ? bound - 1 : 0);
        for (int j = d - 2; j <= d; ++j) {
            TruncatedSeries s = zero;
            for (int i = d; i <= bound; ++i)
                s += detail::laurent_extract(i - 1, j + 2 - i, apow, bpow) * t.pow(i);
            sol.W[j + 2] = std::move(s);
        }
        for (int j = d - 3; j >= -1; --j) {
            std::vector<TruncatedSeries> args(sol.W.begin() + 3, sol.W.begin() + 2 + d);
            sol.W[j + 2] = h_poly(j + 2, args);
        }
    };
    for (int pass = 0; pass <= bound; ++pass) sweep();
    std::vector<TruncatedSeries> frozen = sol.W;
    sweep();
    check(frozen == sol.W, "half-edge W system failed to stabilize");
    return sol;
}

inline TruncatedSeries F_half_edges(int d, int bound) {
    WHalfEdgeSolution w = solve_W_half_edges(d, bound);
    TruncatedSeries f = w.at(d - 2);
    for (int j = -2; j <= d - 3; ++j) f -= w.at(j) * w.at(d - 2 - j);
    f.assert_nonneg("half-edge series coefficient went negative");
    return f;
}

// Solution of the bipartite system: V[j + 1] holds V_j for j in [-1 .. b],
// with V_{-1} = 1. Inner faces of degree 2i are marked by x_{2i}.
struct VSystemSolution {
    int b = 0;
    std::vector<int> degrees;
    int bound = 0;
    std::vector<TruncatedSeries> V;

    const TruncatedSeries& at(int j) const {
        check(j >= -1 && j <= b, "V index out of range");
        return V[j + 1];
    }
};

inline std::pair<VSystemSolution, TruncatedSeries> solve_V_and_E(
    int b, const std::vector<int>& degrees_even, int bound) {
    check(b >= 1, "bipartite girth parameter must be positive");
    for (int deg : degrees_even) check(deg % 2 == 0, "bipartite degrees must be even");
    check(std::is_sorted(degrees_even.begin(), degrees_even.end()) &&
              std::adjacent_find(degrees_even.begin(), degrees_even.end()) ==
                  degrees_even.end(),
          "active degrees must be strictly increasing");
    check(degrees_even.empty() || degrees_even.front() >= 2 * b,
          "active degrees must not fall below twice the girth parameter");

    VSystemSolution sol;
    sol.b = b;
    sol.degrees = degrees_even;
    sol.bound = bound;
    TruncatedSeries zero(degrees_even, bound);
    sol.V.assign(b + 2, zero);
    sol.V[0] = zero.one_like();

    int imax = degrees_even.empty() ? 0 : degrees_even.back() / 2;
    auto sweep = [&]() {
        auto apow = detail::powers_up_to(zero.one_like() + sol.at(0),
                                         imax > 0 ? imax + b : 0);
        for (int j = b - 1; j <= b; ++j) {
            TruncatedSeries s = zero;
            for (int deg : degrees_even) {
                int i = deg / 2;
                Int c = binomial(2 * i - 1, i - j - 1);
                if (c == 0) continue;
                s += c * apow[i + j].shifted_by(deg);
            }
            sol.V[j + 1] = std::move(s);
        }
        for (int j = b - 2; j >= 0; --j) {
            std::vector<TruncatedSeries> args(sol.V.begin() + 2, sol.V.begin() + 1 + b);
            sol.V[j + 1] = h_poly(j + 1, args);
        }
    };
    for (int pass = 0; pass <= bound; ++pass) sweep();
    std::vector<TruncatedSeries> frozen = sol.V;
    sweep();
    check(frozen == sol.V, "V system failed to stabilize within the degree bound");
    for (int j = 0; j <= b; ++j) {
        check(sol.at(j).constant_coeff() == 0, "V series has a spurious constant term");
        sol.at(j).assert_nonneg("V series coefficient went negative");
    }

    TruncatedSeries e = sol.at(b - 1);
    for (int j = -1; j <= b - 2; ++j) e -= sol.at(j) * sol.at(b - j - 1);
    e.assert_nonneg("bipartite series coefficient went negative");

    // The even system must agree with the general one at girth 2b: with only
    // even variables active the odd entries vanish and V_j matches W_{2j}.
    WSystemSolution w = solve_W(2 * b, degrees_even, bound);
    for (int j = -1; j <= 2 * b; j += 2)
        check(w.at(j).is_zero(), "odd entry survived an even-degree specialization");
    for (int j = -1; j <= b; ++j)
        check(sol.at(j) == w.at(2 * j), "bipartite entry disagrees with the general system");
    check(e == series_from_W(w), "bipartite series disagrees with the general one");
    return {std::move(sol), std::move(e)};
}

inline TruncatedSeries E_series(int b, const std::vector<int>& degrees_even, int bound) {
    return solve_V_and_E(b, degrees_even, bound).second;
}

// beta(p, i, e) = p! / (i! floor((p-i-e)/2)! floor((p-i+e-1)/2)!).
inline Int beta_coeff(int p, int i, int e) {
    check(p >= 1 && e >= 1, "beta parameters must be positive");
    check(0 <= i && i <= p - e, "beta index out of range");
    long k1 = (p - i - e) / 2;
    long k2 = (p - i + e - 1) / 2;
    return exact_div(factorial(p), factorial(i) * factorial(k1) * factorial(k2),
                     "beta coefficient");
}

// gamma(p, i, a): zero unless p - i and a have equal parity, else
// p! / (i! ((p-i-a)/2)! ((p-i+a)/2)!).
inline Int gamma_coeff(int p, int i, int a) {
    if (i < 0 || a < 0 || i > p || a > p - i) return 0;
    if ((p - i - a) % 2 != 0) return 0;
    long k1 = (p - i - a) / 2;
    long k2 = (p - i + a) / 2;
    return exact_div(factorial(p), factorial(i) * factorial(k1) * factorial(k2),
                     "gamma coefficient");
}

// Series of rooted annular maps of type (p, q) with non-separating girth at
// least d and separating girth at least e; a corner is marked in each root
// face, and x_i marks the non-root faces of degree i.
inline TruncatedSeries G_annular(int d, int e, int p, int q,
                                 const std::vector<int>& degrees, int bound) {
    check(d >= 1 && e >= 1 && p >= 1 && q >= 1, "annular parameters must be positive");
    WSystemSolution w = solve_W(d, degrees, bound);
    TruncatedSeries zero(degrees, bound);
    TruncatedSeries g = zero;
    if (e > p || e > q) return g;
    auto apow = detail::powers_up_to(zero.one_like() + w.at(0), (p + q) / 2);
    auto bpow = detail::powers_up_to(w.at(-1), p + q - 2 * e);
    for (int i = 0; i <= p - e; ++i)
        for (int j = 0; j <= q - e; ++j) {
            if ((i + j) % 2 != (p + q) % 2) continue;
            Int c = exact_div(2 * beta_coeff(p, i, e) * beta_coeff(q, j, e),
                              p + q - i - j, "annular weight");
            g += c * (apow[(p + q - i - j) / 2] * bpow[i + j]);
        }
    g.assert_nonneg("annular series coefficient went negative");
    return g;
}

// The same class at separating girth equal to the smaller root degree,
// computed from the closed single-extraction form and checked against the
// double summation.
inline TruncatedSeries G_sep_equals_outer(int d, int p, int q,
                                          const std::vector<int>& degrees, int bound) {
    check(1 <= p && p <= q, "extraction form needs the smaller degree first");
    WSystemSolution w = solve_W(d, degrees, bound);
    TruncatedSeries one = TruncatedSeries::one(degrees, bound);
    auto apow = detail::powers_up_to(one + w.at(0), q);
    auto bpow = detail::powers_up_to(w.at(-1), q);
    TruncatedSeries g = Int(p) * detail::laurent_extract(q, p - q, apow, bpow);
    check(g == G_annular(d, p, p, q, degrees, bound),
          "extraction form disagrees with the double summation");
    return g;
}

// Bipartite annular series: type (2r, 2s), non-separating girth at least 2b,
// separating girth at least 2c, only even degrees active.
inline TruncatedSeries B_annular(int b, int c, int r, int s,
                                 const std::vector<int>& degrees_even, int bound) {
    check(b >= 1 && c >= 1 && r >= 1 && s >= 1, "annular parameters must be positive");
    auto [v, e_series] = solve_V_and_E(b, degrees_even, bound);
    (void)e_series;
    Int pre = Int(4) * r * s * binomial(2 * r - 1, r - c) * binomial(2 * s - 1, s - c);
    TruncatedSeries base = (TruncatedSeries::one(degrees_even, bound) + v.at(0)).pow(r + s);
    TruncatedSeries out = (pre * base).divided_exact(r + s, "bipartite annular weight");
    check(out == G_annular(2 * b, 2 * c, 2 * r, 2 * s, degrees_even, bound),
          "bipartite annular series disagrees with the general form");
    out.assert_nonneg("bipartite annular coefficient went negative");
    return out;
}

// Rooted loopless maps with n edges: 2 (4n+1)! / ((n+1)! (3n+2)!).
inline Int count_loopless(int n) {
    check(n >= 0, "edge count must be non-negative");
    return exact_div(2 * factorial(4L * n + 1),
                     factorial(n + 1L) * factorial(3L * n + 2), "loopless count");
}

// The algebraic generator: alpha = 1 + t alpha^4.
inline TruncatedSeries loopless_alpha(int bound) {
    TruncatedSeries t = TruncatedSeries::variable({1}, bound, 1);
    TruncatedSeries one = t.one_like();
    TruncatedSeries a = one;
    for (int pass = 0; pass <= bound; ++pass) a = one + t * a.pow(4);
    check(a == one + t * a.pow(4), "algebraic generator failed to stabilize");
    return a;
}

// C(t) = alpha^2 (2 - alpha); coefficient n is the rooted loopless count.
inline TruncatedSeries loopless_series(int bound) {
    TruncatedSeries a = loopless_alpha(bound);
    TruncatedSeries c = a * a * (TruncatedSeries::constant({1}, bound, 2) - a);
    for (int n = 0; n <= bound; ++n)
        check(c.coeff({n}) == count_loopless(n),
              "algebraic series disagrees with the closed loopless formula");
    return c;
}

// Rooted simple bipartite maps with counts[i] faces of degree 2 (i + 2):
// 2 (e+n-3)!/(e-1)! prod 1/n_i! C(2i-1, i-2)^{n_i}.
inline Int count_simple_bipartite(const std::vector<long>& counts) {
    long n = 0, e = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        check(counts[k] >= 0, "face counts must be non-negative");
        n += counts[k];
        e += counts[k] * static_cast<long>(k + 2);
    }
    check(n > 0, "at least one face is required");
    Int num = 2 * factorial(e + n - 3);
    for (size_t k = 0; k < counts.size(); ++k) {
        long i = static_cast<long>(k) + 2;
        Int b = binomial(2 * i - 1, i - 2);
        for (long rep = 0; rep < counts[k]; ++rep) num *= b;
    }
    Int den = factorial(e - 1);
    for (long c : counts) den *= factorial(c);
    return exact_div(num, den, "simple bipartite count");
}

// Rooted bipartite maps with counts[i] faces of degree 2 (i + 1):
// 2 e!/v! prod 1/n_i! C(2i-1, i-1)^{n_i}, with v = 2 + e - sum n_i.
inline Int count_bipartite(const std::vector<long>& counts) {
    long n = 0, e = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        check(counts[k] >= 0, "face counts must be non-negative");
        n += counts[k];
        e += counts[k] * static_cast<long>(k + 1);
    }
    check(n > 0, "at least one face is required");
    long v = 2 + e - n;
    Int num = 2 * factorial(e);
    for (size_t k = 0; k < counts.size(); ++k) {
        long i = static_cast<long>(k) + 1;
        Int b = binomial(2 * i - 1, i - 1);
        for (long rep = 0; rep < counts[k]; ++rep) num *= b;
    }
    Int den = factorial(v);
    for (long c : counts) den *= factorial(c);
    return exact_div(num, den, "bipartite count");
}

// Coefficient of prod x_{2i}^{nb_i} in R^a, where R = 1 + sum_{i >= 2}
// x_{2i} C(2i-1, i-2) R^{i+1}; nb[k] is the exponent for i = k + 2.
inline Int lagrange_Ra(int a, const std::vector<long>& nb) {
    check(a >= 1, "power must be positive");
    Int num = a;
    long sum_up = 0, sum_lo = 0;
    for (size_t k = 0; k < nb.size(); ++k) {
        check(nb[k] >= 0, "exponents must be non-negative");
        long i = static_cast<long>(k) + 2;
        sum_up += (i + 1) * nb[k];
        sum_lo += i * nb[k];
    }
    num *= factorial(sum_up + a - 1);
    for (size_t k = 0; k < nb.size(); ++k) {
        long i = static_cast<long>(k) + 2;
        Int b = binomial(2 * i - 1, i - 2);
        for (long rep = 0; rep < nb[k]; ++rep) num *= b;
    }
    Int den = factorial(sum_lo + a);
    for (long c : nb) den *= factorial(c);
    return exact_div(num, den, "Lagrange coefficient");
}

// Direct fixed-point expansion of R^a over the labels 2i for i = 2 .. 1 + nb
// arity, for cross-checking the closed coefficient form.
inline TruncatedSeries lagrange_R_direct(const std::vector<int>& labels, int bound) {
    for (int deg : labels) check(deg >= 4 && deg % 2 == 0, "labels must be even and at least 4");
    TruncatedSeries one = TruncatedSeries::one(labels, bound);
    TruncatedSeries r = one;
    auto step = [&](const TruncatedSeries& cur) {
        TruncatedSeries s = one;
        for (int deg : labels) {
            int i = deg / 2;
            s += binomial(2 * i - 1, i - 2) * cur.pow(i + 1).shifted_by(deg);
        }
        return s;
    };
    for (int pass = 0; pass <= bound; ++pass) r = step(r);
    check(r == step(r), "defining equation failed to stabilize");
    return r;
}

struct ReductionCheck {
    std::string name;
    bool ok = false;
};

struct LooplessReductionReport {
    std::vector<ReductionCheck> checks;

    bool all_ok() const {
        for (const ReductionCheck& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

namespace detail {

// Weighted Motzkin path series by direct dynamic programming over steps:
// up, horizontal, and down steps weigh t*up_w, t*hor_w, and t. Bridges may
// go negative; excursions may not. Returns the paths from height 0 to
// heights 0..kmax (bridges) and the excursion series.
struct MotzkinSeries {
    std::vector<TruncatedSeries> bridge;
    TruncatedSeries excursion;
};

inline MotzkinSeries motzkin_series(const TruncatedSeries& up_w,
                                    const TruncatedSeries& hor_w, int kmax, int bound) {
    TruncatedSeries t = TruncatedSeries::variable({1}, bound, 1);
    TruncatedSeries zero = t.zero_like();
    TruncatedSeries tu = t * up_w, th = t * hor_w;
    MotzkinSeries out{std::vector<TruncatedSeries>(kmax + 1, zero), zero};
    out.bridge[0] += zero.one_like();
    out.excursion += zero.one_like();

    int off = bound;
    std::vector<TruncatedSeries> cur(2 * bound + 1, zero), nxt(2 * bound + 1, zero);
    cur[off] = zero.one_like();
    std::vector<TruncatedSeries> pos(bound + 1, zero), npos(bound + 1, zero);
    pos[0] = zero.one_like();
    for (int step = 1; step <= bound; ++step) {
        for (int h = 0; h < static_cast<int>(cur.size()); ++h) {
            TruncatedSeries s = zero;
            if (h > 0) s += cur[h - 1] * tu;
            s += cur[h] * th;
            if (h + 1 < static_cast<int>(cur.size())) s += cur[h + 1] * t;
            nxt[h] = std::move(s);
        }
        cur.swap(nxt);
        for (int k = 0; k <= kmax; ++k) out.bridge[k] += cur[off + k];

        for (int h = 0; h <= bound; ++h) {
            TruncatedSeries s = zero;
            if (h > 0) s += pos[h - 1] * tu;
            s += pos[h] * th;
            if (h + 1 <= bound) s += pos[h + 1] * t;
            npos[h] = std::move(s);
        }
        pos.swap(npos);
        out.excursion += pos[0];
    }
    return out;
}

}  // namespace detail

// Re-derive the loopless reduction from first principles: build the weighted
// Motzkin bridge and excursion series by direct path counting, verify the
// five lattice-path identities, the algebraic solution, and the equality of
// the specialized face-degree series with the algebraic form.
inline LooplessReductionReport verify_loopless_reduction(int bound) {
    check(bound >= 1, "bound must be positive");
    LooplessReductionReport rep;
    auto record = [&](std::string name, bool ok) {
        rep.checks.push_back({std::move(name), ok});
    };

    TruncatedSeries t = TruncatedSeries::variable({1}, bound, 1);
    TruncatedSeries one = t.one_like();

    // alpha = 1 + t^2 alpha^4 when t marks half-edge pairs per step.
    TruncatedSeries a = one;
    for (int pass = 0; pass <= bound; ++pass) a = one + t * t * a.pow(4);
    record("generator equation", a == one + t * t * a.pow(4));

    TruncatedSeries R = a;
    TruncatedSeries S = t.pow(3) * a.pow(6);
    detail::MotzkinSeries paths = detail::motzkin_series(R, S, 3, bound);
    const TruncatedSeries& B0 = paths.bridge[0];
    const TruncatedSeries& M = paths.excursion;

    TruncatedSeries trm = t * R * M;
    bool factor_ok = true;
    for (int k = 1; k <= 3; ++k)
        factor_ok = factor_ok && (paths.bridge[k] == B0 * trm.pow(k));
    record("bridges factor through excursions", factor_ok);
    record("excursion recursion", M == one + t * S * M + t * t * R * (M * M));
    record("bridge recursion", B0 == one + t * S * B0 + Int(2) * (t * t * R * M * B0));
    record("up weight consistency", R == one + t * t * B0 * M * R);
    record("horizontal weight consistency", S == t.pow(3) * B0 * (M * M) * (R * R));
    record("excursions solve to the generator", M == a);
    record("bridges solve to the generator squared", B0 == a * a);
    record("up weight from height one", R == one + t * paths.bridge[1]);
    record("horizontal weight from height two", S == t * paths.bridge[2]);

    TruncatedSeries f2 = F_half_edges(2, bound);
    record("specialized series via path heights",
           f2 == R - one - S * S - t * paths.bridge[3]);
    record("specialized series via the generator", f2 == a * a * (Int(2) * one - a) - one);

    // Unit weights degenerate to classical counts: excursions to Catalan
    // numbers, bridges to central binomials, both in t^2.
    detail::MotzkinSeries plain = detail::motzkin_series(one, t.zero_like(), 0, bound);
    bool catalan_ok = true, central_ok = true;
    for (int n = 0; 2 * n <= bound; ++n) {
        Int cat = exact_div(binomial(2 * n, n), n + 1, "Catalan");
        catalan_ok = catalan_ok && plain.excursion.coeff({2 * n}) == cat;
        central_ok = central_ok && plain.bridge[0].coeff({2 * n}) == binomial(2 * n, n);
    }
    for (int n = 1; n <= bound; n += 2) {
        catalan_ok = catalan_ok && plain.excursion.coeff({n}) == 0;
        central_ok = central_ok && plain.bridge[0].coeff({n}) == 0;
    }
    record("unit-weight excursions are Catalan", catalan_ok);
    record("unit-weight bridges are central binomials", central_ok);
    return rep;
}

}  // namespace mapgirth
