#include "crystalcone/linear_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace crystalcone {

LinearForm LinearForm::unit(Int k) {
    LinearForm f;
    f.terms_.emplace_back(k, 1);
    return f;
}

LinearForm LinearForm::from_terms(std::vector<std::pair<Int, Int>> terms) {
    std::map<Int, Int> collected;
    for (const auto& [k, c] : terms) collected[k] += c;
    LinearForm f;
    for (const auto& [k, c] : collected)
        if (c != 0) f.terms_.emplace_back(k, c);
    return f;
}

Int LinearForm::coeff(Int k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const auto& term, Int key) { return term.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return 0;
}

Int LinearForm::max_abs_coeff() const {
    Int best = 0;
    for (const auto& [k, c] : terms_) best = std::max(best, c < 0 ? -c : c);
    return best;
}

Int LinearForm::evaluate(const ZSeq& x) const {
    Int value = 0;
    for (const auto& [k, c] : terms_) value += c * x.at(k);
    return value;
}

LinearForm& LinearForm::add_scaled(const LinearForm& other, Int scale) {
    if (scale == 0) return *this;
    std::vector<std::pair<Int, Int>> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    size_t a = 0;
    size_t b = 0;
    while (a < terms_.size() || b < other.terms_.size()) {
        if (b == other.terms_.size() || (a < terms_.size() && terms_[a].first < other.terms_[b].first)) {
            merged.push_back(terms_[a++]);
        } else if (a == terms_.size() || other.terms_[b].first < terms_[a].first) {
            merged.emplace_back(other.terms_[b].first, scale * other.terms_[b].second);
            ++b;
        } else {
            const Int c = terms_[a].second + scale * other.terms_[b].second;
            if (c != 0) merged.emplace_back(terms_[a].first, c);
            ++a;
            ++b;
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& t) { return t.second == 0; }),
                 merged.end());
    terms_ = std::move(merged);
    return *this;
}

LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    LinearForm result(a);
    result.add_scaled(b, -1);
    return result;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    LinearForm result(a);
    result.add_scaled(b, 1);
    return result;
}

std::string LinearForm::to_string(Style style) const {
    if (terms_.empty()) return "0 >= 0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const Int mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (style == Style::kExplicit || mag != 1) out << mag << "*";
        out << "x" << k;
    }
    out << " >= 0";
    return out.str();
}

std::size_t LinearFormHash::operator()(const LinearForm& f) const {
    std::size_t h = 0x517cc1b727220a95ull;
    for (const auto& [k, c] : f.terms()) {
        h ^= std::hash<Int>()(k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<Int>()(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace crystalcone
