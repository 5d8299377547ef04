#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace lslink {

// Laurent polynomials with exact integer coefficients in one or two variables.
// Exponents may be half-integers: a monomial c*t^(k/2) is stored under the
// doubled exponent k, so integer-exponent polynomials have all keys even.

class LaurentPoly1 {
  public:
    using Terms = std::map<int, std::int64_t>;  // doubled exponent -> coefficient

    LaurentPoly1() = default;
    explicit LaurentPoly1(Terms terms);

    // c*t^(d/2)
    static LaurentPoly1 monomial(std::int64_t c, int doubled_exp);
    static LaurentPoly1 constant(std::int64_t c) { return monomial(c, 0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool integral_exponents() const;
    std::int64_t coeff_doubled(int doubled_exp) const;
    // Coefficient of t^e for integer e.
    std::int64_t coeff(int e) const { return coeff_doubled(2 * e); }
    int min_doubled_exp() const;  // requires nonzero
    int max_doubled_exp() const;
    std::int64_t eval_at_one() const;

    LaurentPoly1& operator+=(const LaurentPoly1& o);
    LaurentPoly1& operator-=(const LaurentPoly1& o);
    friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
    friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
    LaurentPoly1 operator-() const;
    friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) {
        return a.terms_ == b.terms_;
    }

    // True iff substituting t -> t^-1 gives sign*p.
    bool is_symmetric(int sign) const;

    // Multiplication by t^(d/2).
    LaurentPoly1 shifted(int doubled_exp) const;

    std::string str() const;  // text grammar, variable "t"

  private:
    void prune();
    Terms terms_;
};

class LaurentPoly2 {
  public:
    using Key = std::pair<int, int>;  // doubled exponents (e1, e2)
    using Terms = std::map<Key, std::int64_t>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(Terms terms);

    static LaurentPoly2 monomial(std::int64_t c, int d1, int d2);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool integral_exponents() const;
    std::int64_t coeff_doubled(int d1, int d2) const;
    std::int64_t coeff(int e1, int e2) const { return coeff_doubled(2 * e1, 2 * e2); }

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    LaurentPoly2 operator-() const;
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }

    bool is_symmetric(int sign) const;

    // Multiplication by t1^(d1/2)*t2^(d2/2).
    LaurentPoly2 shifted(int d1, int d2) const;

    // Substitute t1 = t2 = t.
    LaurentPoly1 diagonal() const;

    std::string str() const;  // text grammar, variables "t1", "t2"

  private:
    void prune();
    Terms terms_;
};

// A power series in t^-1 with exponents bounded above: finitely many stored
// coefficients on [lo, hi] plus a tail rule for e < lo,
//   coeff(e) = coeff(lo) + slope*(lo - e),
// slope 0 meaning an eventually constant series. Exponents here are honest
// integers, not doubled.
class NegPowerSeries {
  public:
    NegPowerSeries() = default;  // zero series

    // Embeds a finitely supported integer-exponent polynomial (tail 0).
    static NegPowerSeries from_poly(const LaurentPoly1& p);

    bool is_zero() const { return window_.empty() && slope_ == 0; }
    std::int64_t coeff(int e) const;
    int window_lo() const { return lo_; }
    int window_hi() const { return hi_; }
    std::int64_t tail_slope() const { return slope_; }

    // Multiplication by sum_{k>=0} t^-k, i.e. division by (1 - t^-1).
    // Input must have tail 0; the result has a constant tail.
    NegPowerSeries times_geometric() const;

    // Multiplication by sum_{k>=0} (k+1) t^-k, i.e. division by (1 - t^-1)^2.
    // Input must have tail 0; the result has an eventually linear tail.
    NegPowerSeries times_geometric_squared() const;

    friend bool operator==(const NegPowerSeries& a, const NegPowerSeries& b);

  private:
    NegPowerSeries(std::map<int, std::int64_t> window, int lo, int hi, std::int64_t slope)
        : window_(std::move(window)), lo_(lo), hi_(hi), slope_(slope) {}

    std::map<int, std::int64_t> window_;
    int lo_ = 0;
    int hi_ = -1;
    std::int64_t slope_ = 0;
};

// --- module-level operations ---------------------------------------------

bool is_symmetric(const LaurentPoly1& p, int sign);
bool is_symmetric(const LaurentPoly2& p, int sign);

// (t1*t2)^(1/2) * delta; all exponents of the result must be integers,
// otherwise the input had nonzero linking number.
LaurentPoly2 tilde_normalize(const LaurentPoly2& delta);

// delta / (1 - t^-1), expanded as a power series in t^-1.
NegPowerSeries tilde_normalize(const LaurentPoly1& delta);

NegPowerSeries divide_by_geometric_squared(const NegPowerSeries& s);

// Symmetrized Alexander polynomial of the (p,q) torus knot.
LaurentPoly1 torus_knot_alexander(int p, int q);

// Built-in inputs matching the worked examples shipped with the tool.
namespace families {
LaurentPoly1 unknot_alexander();                 // 1
LaurentPoly2 whitehead_alexander();              // -(t1^(1/2)-t1^(-1/2))(t2^(1/2)-t2^(-1/2))
LaurentPoly2 unlink2_alexander();                // 0
}  // namespace families

// --- text grammar ----------------------------------------------------------
// Signed integer coefficients, variables t / t1 / t2, exponents written as
// plain integers or as (k/2), e.g. "-t1^(1/2)*t2^(1/2) + 2*t1 - 1".

LaurentPoly1 parse_poly1(const std::string& text);
LaurentPoly2 parse_poly2(const std::string& text);

}  // namespace lslink
