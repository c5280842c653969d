#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace gcs {

/// Exact rational arithmetic. The exponent p enters knife-edge comparisons
/// against 1 + 4/(n+2), 1 + 4/n and p*(n); those must classify exactly when
/// the caller supplies p as a fraction.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Parses "7/3", "-2/5" or a plain integer "5". Returns nullopt for
    /// anything else (decimals are handled as doubles by the caller).
    static std::optional<Rational> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        const auto slash = s.find('/');
        char* end = nullptr;
        if (slash == std::string::npos) {
            const long long n = std::strtoll(s.c_str(), &end, 10);
            if (end != s.c_str() + s.size()) return std::nullopt;
            return Rational(n);
        }
        const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        const long long n = std::strtoll(ns.c_str(), &end, 10);
        if (end != ns.c_str() + ns.size()) return std::nullopt;
        char* end2 = nullptr;
        const long long d = std::strtoll(ds.c_str(), &end2, 10);
        if (end2 != ds.c_str() + ds.size() || d == 0) return std::nullopt;
        return Rational(n, d);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    static int cmp(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// A scalar exponent that remembers whether it was given exactly.
/// Fractions ("7/3") and integers ("5") stay exact; decimals ("2.5") are
/// plain doubles and fall into open intervals by strict comparison.
class Exponent {
public:
    Exponent(double v) : value_(v) {}                                    // NOLINT(google-explicit-constructor)
    Exponent(const Rational& r) : value_(r.value()), exact_(r) {}        // NOLINT(google-explicit-constructor)
    Exponent(int v) : Exponent(Rational(v)) {}                           // NOLINT(google-explicit-constructor)

    static Exponent parse(const std::string& s) {
        if (auto r = Rational::parse(s)) return Exponent(*r);
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size() || s.empty())
            throw std::invalid_argument("cannot parse exponent: '" + s + "'");
        return Exponent(v);
    }

    double value() const noexcept { return value_; }
    bool is_exact() const noexcept { return exact_.has_value(); }
    const Rational& exact() const { return *exact_; }

    std::string str() const {
        if (exact_) return exact_->str();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", value_);
        return buf;
    }

    /// Three-way comparison against an exact boundary; rational inputs
    /// compare exactly, doubles compare by value.
    friend int cmp(const Exponent& p, const Rational& boundary) {
        if (p.is_exact()) return Rational::cmp(p.exact(), boundary);
        const double b = boundary.value();
        return p.value_ < b ? -1 : (p.value_ > b ? 1 : 0);
    }

private:
    double value_;
    std::optional<Rational> exact_;
};

} // namespace gcs
