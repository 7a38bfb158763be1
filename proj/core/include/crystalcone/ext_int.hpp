#pragma once

#include "crystalcone/fraction.hpp"

#include <stdexcept>
#include <string>

namespace crystalcone {

/// An integer extended by minus infinity. Minus infinity absorbs addition
/// and loses every max; it is a distinct state, never a sentinel value.
class ExtInt {
public:
    ExtInt() : finite_(true), value_(0) {}
    ExtInt(Int v) : finite_(true), value_(v) {} // NOLINT(google-explicit-constructor)

    static ExtInt minus_infinity() {
        ExtInt e;
        e.finite_ = false;
        e.value_ = 0;
        return e;
    }

    bool finite() const { return finite_; }
    Int value() const {
        if (!finite_) throw std::logic_error("ExtInt: minus infinity has no integer value");
        return value_;
    }

    friend ExtInt operator+(const ExtInt& a, Int b) {
        return a.finite_ ? ExtInt(a.value_ + b) : minus_infinity();
    }
    friend ExtInt operator-(const ExtInt& a, Int b) { return a + (-b); }

    friend ExtInt max(const ExtInt& a, const ExtInt& b) {
        if (!a.finite_) return b;
        if (!b.finite_) return a;
        return ExtInt(a.value_ > b.value_ ? a.value_ : b.value_);
    }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    bool finite_;
    Int value_;
};

} // namespace crystalcone
