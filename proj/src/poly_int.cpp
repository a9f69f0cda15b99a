#include "ringcover/poly_int.hpp"

#include <cctype>
#include <sstream>

#include "ringcover/errors.hpp"
#include "ringcover/matrix.hpp"

namespace ringcover {

void PolyInt::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyInt::PolyInt(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyInt PolyInt::from_leading(const std::vector<Int>& leading_first) {
    std::vector<Int> c(leading_first.rbegin(), leading_first.rend());
    return PolyInt(std::move(c));
}

PolyInt PolyInt::constant(const Int& c) { return PolyInt(std::vector<Int>{c}); }

PolyInt PolyInt::monomial(const Int& c, size_t deg) {
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return PolyInt(std::move(v));
}

const Int& PolyInt::coeff(size_t i) const {
    static const Int zero{0};
    return i < c_.size() ? c_[i] : zero;
}

Int PolyInt::evaluate(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

PolyInt PolyInt::derivative() const {
    if (c_.size() <= 1) return PolyInt();
    std::vector<Int> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return PolyInt(std::move(d));
}

Int PolyInt::content() const {
    Int g = 0;
    for (const Int& x : c_) g = gcd(g, x);
    return g;
}

PolyInt PolyInt::operator-() const {
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return PolyInt(std::move(v));
}

PolyInt operator+(const PolyInt& a, const PolyInt& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return PolyInt(std::move(v));
}

PolyInt operator-(const PolyInt& a, const PolyInt& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return PolyInt(std::move(v));
}

PolyInt operator*(const PolyInt& a, const PolyInt& b) {
    if (a.is_zero() || b.is_zero()) return PolyInt();
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyInt(std::move(v));
}

PolyInt operator*(const Int& c, const PolyInt& a) {
    std::vector<Int> v(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = c * a.c_[i];
    return PolyInt(std::move(v));
}

void PolyInt::divmod_monic(const PolyInt& num, const PolyInt& den, PolyInt& q, PolyInt& r) {
    if (!den.is_monic()) throw NonMonicError("divmod_monic: divisor must be monic");
    std::vector<Int> rem = num.c_;
    int dd = den.degree();
    std::vector<Int> quot;
    if (num.degree() >= dd) quot.assign(static_cast<size_t>(num.degree() - dd) + 1, Int(0));
    for (int i = num.degree(); i >= dd; --i) {
        Int f = rem[static_cast<size_t>(i)];
        if (f == 0) continue;
        quot[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= f * den.coeff(static_cast<size_t>(j));
    }
    q = PolyInt(std::move(quot));
    r = PolyInt(std::move(rem));
}

std::string PolyInt::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::string PolyInt::to_coeff_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = c_.size(); i-- > 0;) {
        os << c_[i].get_str();
        if (i > 0) os << ',';
    }
    return os.str();
}

namespace {

Int parse_integer(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw PolyParseError("empty coefficient");
    try {
        return Int(t);
    } catch (const std::invalid_argument&) {
        throw PolyParseError("bad integer: '" + s + "'");
    }
}

PolyInt parse_coeff_list(const std::string& text) {
    std::vector<Int> leading_first;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            leading_first.push_back(parse_integer(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return PolyInt::from_leading(leading_first);
}

// Term grammar: [integer][*]x[^exponent] or a bare integer, joined by + and -.
PolyInt parse_terms(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw PolyParseError("empty polynomial");
    std::vector<Int> coeffs;
    auto add_term = [&](const Int& c, size_t e) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, Int(0));
        coeffs[e] += c;
    };
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            if (i == s.size()) throw PolyParseError("dangling sign");
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        Int c = digits.empty() ? Int(1) : parse_integer(digits);
        c *= sign;
        if (i < s.size() && s[i] == '*') {
            ++i;
            if (i == s.size() || s[i] != 'x') throw PolyParseError("expected x after '*'");
        }
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            size_t e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
                if (ed.empty()) throw PolyParseError("missing exponent");
                e = std::stoul(ed);
            }
            add_term(c, e);
        } else {
            if (digits.empty()) throw PolyParseError("unexpected character in polynomial");
            add_term(c, 0);
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw PolyParseError("unexpected character in polynomial");
    }
    return PolyInt(std::move(coeffs));
}

} // namespace

PolyInt PolyInt::parse(const std::string& text) {
    try {
        if (text.find(',') != std::string::npos) return parse_coeff_list(text);
        return parse_terms(text);
    } catch (const PolyParseError& e) {
        throw PolyParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

Int resultant(const PolyInt& f, const PolyInt& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) return int_pow(f.coeff(0), static_cast<unsigned long>(n));
    if (n == 0) return int_pow(g.coeff(0), static_cast<unsigned long>(m));
    size_t sz = static_cast<size_t>(m + n);
    IntMat s(sz, sz);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s.at(static_cast<size_t>(r), static_cast<size_t>(r + j)) = f.coeff(static_cast<size_t>(m - j));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            s.at(static_cast<size_t>(n + r), static_cast<size_t>(r + j)) = g.coeff(static_cast<size_t>(n - j));
    return det_bareiss(std::move(s));
}

Int discriminant(const PolyInt& f) {
    if (!f.is_monic()) throw NonMonicError("discriminant: polynomial must be monic");
    int n = f.degree();
    if (n < 1) throw InternalError("discriminant: degree must be >= 1");
    Int res = resultant(f, f.derivative());
    long s = (static_cast<long>(n) * (n - 1) / 2) % 2;
    return s == 0 ? res : -res;
}

Int fixed_divisor(const PolyInt& f) {
    if (f.is_zero()) throw ZeroPolynomialError("fixed_divisor: zero polynomial");
    Int g = 0;
    for (int x = 0; x <= f.degree(); ++x) g = gcd(g, f.evaluate(Int(x)));
    return abs(g);
}

} // namespace ringcover
