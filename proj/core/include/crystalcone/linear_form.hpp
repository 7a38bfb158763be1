#pragma once

#include "crystalcone/zseq.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crystalcone {

/// An integer linear form sum_k c_k x_k with finite support, canonical:
/// terms sorted by index, zero coefficients never stored.
class LinearForm {
public:
    LinearForm() = default;

    static LinearForm unit(Int k);                          // the coordinate form x_k
    static LinearForm from_terms(std::vector<std::pair<Int, Int>> terms);

    Int coeff(Int k) const;
    bool is_zero() const { return terms_.empty(); }
    Int max_support() const { return terms_.empty() ? 0 : terms_.back().first; }
    Int min_support() const { return terms_.empty() ? 0 : terms_.front().first; }
    Int max_abs_coeff() const;

    Int evaluate(const ZSeq& x) const;

    LinearForm& add_scaled(const LinearForm& other, Int scale); // *this += scale * other
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
    friend LinearForm operator+(const LinearForm& a, const LinearForm& b);

    const std::vector<std::pair<Int, Int>>& terms() const { return terms_; }

    bool operator==(const LinearForm& other) const { return terms_ == other.terms_; }
    bool operator<(const LinearForm& other) const { return terms_ < other.terms_; }

    enum class Style {
        kElideUnits,   // "x2 - x3"
        kExplicit,     // "1*x2 - 1*x3"
    };
    /// Renders "<terms> >= 0"; the zero form renders "0 >= 0".
    std::string to_string(Style style = Style::kElideUnits) const;

private:
    std::vector<std::pair<Int, Int>> terms_;
};

struct LinearFormHash {
    std::size_t operator()(const LinearForm& f) const;
};

} // namespace crystalcone
