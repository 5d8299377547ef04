#include "lslink/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "lslink/errors.hpp"

namespace lslink {

// --- LaurentPoly1 -----------------------------------------------------------

LaurentPoly1::LaurentPoly1(Terms terms) : terms_(std::move(terms)) { prune(); }

LaurentPoly1 LaurentPoly1::monomial(std::int64_t c, int doubled_exp) {
    LaurentPoly1 p;
    if (c != 0) p.terms_[doubled_exp] = c;
    return p;
}

void LaurentPoly1::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

bool LaurentPoly1::integral_exponents() const {
    for (const auto& [d, c] : terms_)
        if (d % 2 != 0) return false;
    return true;
}

std::int64_t LaurentPoly1::coeff_doubled(int d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly1::min_doubled_exp() const { return terms_.begin()->first; }
int LaurentPoly1::max_doubled_exp() const { return terms_.rbegin()->first; }

std::int64_t LaurentPoly1::eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [d, c] : terms_) s += c;
    return s;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(d, c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) { return *this += -o; }

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r(*this);
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1::Terms out;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) out[da + db] += ca * cb;
    return LaurentPoly1(std::move(out));
}

bool LaurentPoly1::is_symmetric(int sign) const {
    for (const auto& [d, c] : terms_)
        if (coeff_doubled(-d) != sign * c) return false;
    return true;
}

LaurentPoly1 LaurentPoly1::shifted(int doubled_exp) const {
    Terms out;
    for (const auto& [d, c] : terms_) out[d + doubled_exp] = c;
    return LaurentPoly1(std::move(out));
}

// --- LaurentPoly2 -----------------------------------------------------------

LaurentPoly2::LaurentPoly2(Terms terms) : terms_(std::move(terms)) { prune(); }

LaurentPoly2 LaurentPoly2::monomial(std::int64_t c, int d1, int d2) {
    LaurentPoly2 p;
    if (c != 0) p.terms_[{d1, d2}] = c;
    return p;
}

void LaurentPoly2::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

bool LaurentPoly2::integral_exponents() const {
    for (const auto& [k, c] : terms_)
        if (k.first % 2 != 0 || k.second % 2 != 0) return false;
    return true;
}

std::int64_t LaurentPoly2::coeff_doubled(int d1, int d2) const {
    auto it = terms_.find({d1, d2});
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) { return *this += -o; }

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2::Terms out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return LaurentPoly2(std::move(out));
}

bool LaurentPoly2::is_symmetric(int sign) const {
    for (const auto& [k, c] : terms_)
        if (coeff_doubled(-k.first, -k.second) != sign * c) return false;
    return true;
}

LaurentPoly2 LaurentPoly2::shifted(int d1, int d2) const {
    Terms out;
    for (const auto& [k, c] : terms_) out[{k.first + d1, k.second + d2}] = c;
    return LaurentPoly2(std::move(out));
}

LaurentPoly1 LaurentPoly2::diagonal() const {
    LaurentPoly1::Terms out;
    for (const auto& [k, c] : terms_) out[k.first + k.second] += c;
    return LaurentPoly1(std::move(out));
}

// --- NegPowerSeries ---------------------------------------------------------

NegPowerSeries NegPowerSeries::from_poly(const LaurentPoly1& p) {
    if (p.is_zero()) return {};
    if (!p.integral_exponents())
        throw NonIntegralExponents("series expansion needs integer exponents");
    int lo = p.min_doubled_exp() / 2 - 1;
    int hi = p.max_doubled_exp() / 2;
    std::map<int, std::int64_t> w;
    for (int e = lo; e <= hi; ++e) w[e] = p.coeff(e);
    return {std::move(w), lo, hi, 0};
}

std::int64_t NegPowerSeries::coeff(int e) const {
    if (window_.empty()) return 0;
    if (e > hi_) return 0;
    if (e >= lo_) return window_.at(e);
    return window_.at(lo_) + slope_ * static_cast<std::int64_t>(lo_ - e);
}

bool operator==(const NegPowerSeries& a, const NegPowerSeries& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.slope_ != b.slope_) return false;
    int hi = std::max(a.hi_, b.hi_), lo = std::min(a.lo_, b.lo_);
    for (int e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

namespace {

// Tail detection: the last few stored differences must be constant. The
// computation window is 2*span+8 deep, enough for tails of delta/(1-t^-1)^k
// to stabilize within the Alexander-polynomial span.
std::int64_t detect_slope(const std::map<int, std::int64_t>& w, int lo) {
    std::int64_t slope = w.at(lo) - w.at(lo + 1);
    for (int m = lo; m <= lo + 3; ++m)
        if (w.at(m) - w.at(m + 1) != slope)
            throw TailNotRecognized("no constant/linear tail within computed window");
    return slope;
}

}  // namespace

NegPowerSeries NegPowerSeries::times_geometric() const {
    if (is_zero()) return {};
    if (slope_ != 0 || window_.at(lo_) != 0)
        throw TailNotRecognized("geometric multiplication needs finitely supported input");
    int span = hi_ - lo_;
    int lo = hi_ - (2 * span + 8);
    std::map<int, std::int64_t> out;
    std::int64_t acc = 0;
    for (int e = hi_; e >= lo; --e) {
        acc += coeff(e);
        out[e] = acc;
    }
    std::int64_t slope = detect_slope(out, lo);
    if (slope != 0) throw TailNotRecognized("expected eventually constant series");
    return {std::move(out), lo, hi_, 0};
}

NegPowerSeries NegPowerSeries::times_geometric_squared() const {
    if (is_zero()) return {};
    if (slope_ != 0 || window_.at(lo_) != 0)
        throw TailNotRecognized("geometric multiplication needs finitely supported input");
    int span = hi_ - lo_;
    int lo = hi_ - (2 * span + 8);
    std::map<int, std::int64_t> out;
    std::int64_t s1 = 0, s2 = 0;
    for (int e = hi_; e >= lo; --e) {
        s1 += coeff(e);
        s2 += s1;  // s2(e) = sum_{j>=e} coeff(j)*(j-e+1)
        out[e] = s2;
    }
    std::int64_t slope = detect_slope(out, lo);
    return {std::move(out), lo, hi_, slope};
}

// --- module-level operations ------------------------------------------------

bool is_symmetric(const LaurentPoly1& p, int sign) { return p.is_symmetric(sign); }
bool is_symmetric(const LaurentPoly2& p, int sign) { return p.is_symmetric(sign); }

LaurentPoly2 tilde_normalize(const LaurentPoly2& delta) {
    if (!delta.is_symmetric(1) && !delta.is_symmetric(-1))
        throw std::invalid_argument("Alexander polynomial is not (anti)symmetric");
    LaurentPoly2 t = delta.shifted(1, 1);
    if (!t.integral_exponents())
        throw NonIntegralExponents("(t1*t2)^(1/2)*Delta has half-integer exponents; linking number is nonzero");
    return t;
}

NegPowerSeries tilde_normalize(const LaurentPoly1& delta) {
    if (!delta.is_symmetric(1) && !delta.is_symmetric(-1))
        throw std::invalid_argument("Alexander polynomial is not (anti)symmetric");
    return NegPowerSeries::from_poly(delta).times_geometric();
}

NegPowerSeries divide_by_geometric_squared(const NegPowerSeries& s) {
    return s.times_geometric_squared();
}

LaurentPoly1 torus_knot_alexander(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw InvalidTorusParameters("torus knot parameters must be coprime and >= 2");
    // (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), exact long division over Z.
    auto mul = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto cyc = [](int n) {  // t^n - 1
        std::vector<std::int64_t> v(n + 1, 0);
        v[0] = -1;
        v[n] = 1;
        return v;
    };
    std::vector<std::int64_t> num = mul(cyc(p * q), cyc(1));
    std::vector<std::int64_t> den = mul(cyc(p), cyc(q));
    std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        std::int64_t c = num[i + den.size() - 1];
        quot[i] = c;  // den is monic
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    LaurentPoly1::Terms terms;
    int genus2 = (p - 1) * (q - 1);  // degree of the quotient; even, so the shift is integral
    for (size_t e = 0; e < quot.size(); ++e)
        if (quot[e] != 0) terms[2 * static_cast<int>(e) - genus2] = quot[e];
    return LaurentPoly1(std::move(terms));
}

namespace families {

LaurentPoly1 unknot_alexander() { return LaurentPoly1::constant(1); }

LaurentPoly2 whitehead_alexander() {
    // -(t1^(1/2)-t1^(-1/2))(t2^(1/2)-t2^(-1/2))
    LaurentPoly2 f1 = LaurentPoly2::monomial(1, 1, 0) - LaurentPoly2::monomial(1, -1, 0);
    LaurentPoly2 f2 = LaurentPoly2::monomial(1, 0, 1) - LaurentPoly2::monomial(1, 0, -1);
    return -(f1 * f2);
}

LaurentPoly2 unlink2_alexander() { return {}; }

}  // namespace families

// --- text grammar -----------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial parse error at offset " + std::to_string(i) + ": " + what);
    }
    std::int64_t integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
        std::int64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }
};

struct RawTerm {
    std::int64_t coeff = 1;
    int d[2] = {0, 0};  // doubled exponents per variable
};

// exponent := integer | '(' integer '/' '2' ')', returned doubled
int parse_exponent(Cursor& c) {
    if (c.eat('(')) {
        std::int64_t k = c.integer();
        if (!c.eat('/')) c.fail("expected '/' in half-integer exponent");
        if (c.integer() != 2) c.fail("only halves are supported as fractional exponents");
        if (!c.eat(')')) c.fail("expected ')'");
        return static_cast<int>(k);
    }
    return static_cast<int>(2 * c.integer());
}

// nvars = 1 accepts "t"; nvars = 2 accepts "t1", "t2".
std::vector<RawTerm> parse_terms(Cursor& c, int nvars) {
    std::vector<RawTerm> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.eat('-')) sign = -1;
        else if (c.eat('+')) sign = 1;
        else if (!first) c.fail("expected '+' or '-' between terms");
        first = false;

        RawTerm t;
        t.coeff = sign;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            t.coeff *= c.integer();
            saw_factor = true;
            c.eat('*');
        }
        while (c.peek() == 't') {
            ++c.i;
            int var = 0;
            if (c.i < c.s.size() && (c.s[c.i] == '1' || c.s[c.i] == '2')) {
                if (nvars == 1) c.fail("variable t1/t2 in a one-variable polynomial");
                var = c.s[c.i] - '1';
                ++c.i;
            } else if (nvars == 2) {
                c.fail("use t1/t2 in a two-variable polynomial");
            }
            int d = 2;
            if (c.eat('^')) d = parse_exponent(c);
            t.d[var] += d;
            saw_factor = true;
            c.eat('*');
        }
        if (!saw_factor) c.fail("empty term");
        terms.push_back(t);
    }
    return terms;
}

void append_coeff(std::string& out, std::int64_t c, bool has_vars, bool first) {
    if (c < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || !has_vars) {
        out += std::to_string(a);
        if (has_vars) out += "*";
    }
}

void append_var(std::string& out, const char* var, int d, bool leading_star) {
    if (d == 0) return;
    if (leading_star) out += "*";
    out += var;
    if (d == 2) return;
    out += "^";
    if (d % 2 == 0) {
        out += std::to_string(d / 2);
    } else {
        out += "(" + std::to_string(d) + "/2)";
    }
}

}  // namespace

LaurentPoly1 parse_poly1(const std::string& text) {
    Cursor c{text};
    LaurentPoly1::Terms out;
    for (const RawTerm& t : parse_terms(c, 1)) out[t.d[0]] += t.coeff;
    return LaurentPoly1(std::move(out));
}

LaurentPoly2 parse_poly2(const std::string& text) {
    Cursor c{text};
    LaurentPoly2::Terms out;
    for (const RawTerm& t : parse_terms(c, 2)) out[{t.d[0], t.d[1]}] += t.coeff;
    return LaurentPoly2(std::move(out));
}

std::string LaurentPoly1::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_coeff(out, it->second, it->first != 0, first);
        append_var(out, "t", it->first, false);
        first = false;
    }
    return out;
}

std::string LaurentPoly2::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [d1, d2] = it->first;
        append_coeff(out, it->second, d1 != 0 || d2 != 0, first);
        append_var(out, "t1", d1, false);
        append_var(out, "t2", d2, d1 != 0);
        first = false;
    }
    return out;
}

}  // namespace lslink
