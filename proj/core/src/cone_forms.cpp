#include "crystalcone/cone_forms.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace crystalcone {

LinearForm beta_form(const CrystalData& cd, Int k) {
    if (k < 0) throw std::out_of_range("beta_form: k must be >= 0");
    if (k == 0) return LinearForm{};
    const Int up = cd.iota.next_occ(k);
    const int color = cd.iota.at(k);
    std::vector<std::pair<Int, Int>> terms;
    terms.emplace_back(k, 1);
    for (Int j = k + 1; j < up; ++j) {
        const Int pairing = cd.cartan.at(color, cd.iota.at(j));
        if (pairing != 0) terms.emplace_back(j, pairing);
    }
    terms.emplace_back(up, 1);
    return LinearForm::from_terms(std::move(terms));
}

LinearForm sigma_form(const CrystalData& cd, Int k, Int window) {
    if (k < 1) throw std::out_of_range("sigma_form: k must be >= 1");
    const int color = cd.iota.at(k);
    std::vector<std::pair<Int, Int>> terms;
    terms.emplace_back(k, 1);
    for (Int j = k + 1; j <= window; ++j) {
        const Int pairing = cd.cartan.at(color, cd.iota.at(j));
        if (pairing != 0) terms.emplace_back(j, pairing);
    }
    return LinearForm::from_terms(std::move(terms));
}

LinearForm s_transform(const CrystalData& cd, const LinearForm& form, Int k) {
    const Int ck = form.coeff(k);
    if (ck == 0) return form;
    LinearForm result(form);
    if (ck > 0) {
        result.add_scaled(beta_form(cd, k), -ck);
    } else {
        const Int prev = cd.iota.prev_occ(k);
        if (prev != 0) result.add_scaled(beta_form(cd, prev), -ck);
        // prev == 0: subtracting ck * beta_0 changes nothing
    }
    return result;
}

namespace {

ClosureResult closure_impl(const CrystalData& cd, Int window, std::vector<Int> seeds,
                           const ClosureOptions& options) {
    if (window < cd.iota.scan_window())
        throw WindowTooSmall("form closure: window shorter than one period of the index sequence");
    if (seeds.empty())
        for (Int j = 1; j <= window; ++j) seeds.push_back(j);

    std::unordered_set<LinearForm, LinearFormHash> seen;
    std::deque<LinearForm> queue;
    ClosureResult result;

    for (Int j : seeds) {
        if (j < 1 || j > window) throw WindowTooSmall("form closure: seed index outside the window");
        LinearForm f = LinearForm::unit(j);
        if (seen.insert(f).second) queue.push_back(std::move(f));
    }

    while (!queue.empty()) {
        if (seen.size() > options.max_forms) {
            result.truncated = true;
            break;
        }
        LinearForm form = std::move(queue.front());
        queue.pop_front();
        // Only k in the support can act; elsewhere S_k is the identity.
        for (const auto& [k, ck] : form.terms()) {
            if (options.positive_only && ck <= 0) continue;
            LinearForm image = s_transform(cd, form, k);
            if (image == form) continue;
            if (image.max_support() > window) continue; // outside the window by contract
            if (image.max_abs_coeff() > options.max_coeff) {
                result.truncated = true;
                ++result.dropped_by_coeff;
                continue;
            }
            if (seen.insert(image).second) queue.push_back(std::move(image));
        }
    }

    result.forms.assign(seen.begin(), seen.end());
    std::sort(result.forms.begin(), result.forms.end());
    return result;
}

} // namespace

ClosureResult form_closure(const CrystalData& cd, Int window, std::vector<Int> seeds,
                           const ClosureOptions& options) {
    return closure_impl(cd, window, std::move(seeds), options);
}

ClosureResult positive_form_closure(const CrystalData& cd, Int window, std::vector<Int> seeds,
                                    ClosureOptions options) {
    options.positive_only = true;
    return closure_impl(cd, window, std::move(seeds), options);
}

PositivityReport check_positivity(const CrystalData& cd, Int window, const ClosureOptions& options) {
    const ClosureResult closure = form_closure(cd, window, {}, options);
    PositivityReport report;
    report.truncated = closure.truncated;
    const std::vector<Int> firsts = cd.iota.first_occurrences();
    for (const LinearForm& form : closure.forms) {
        for (Int k : firsts) {
            if (form.coeff(k) < 0) {
                report.holds = false;
                report.witnesses.emplace_back(form, k);
            }
        }
    }
    return report;
}

std::vector<std::size_t> observed_redundant_forms(const std::vector<LinearForm>& forms,
                                                  const std::vector<ZSeq>& box) {
    // For each box point record which forms reject it; a form is observed
    // redundant when it never rejects alone.
    std::vector<bool> sole_rejector(forms.size(), false);
    for (const ZSeq& x : box) {
        if (!x.nonnegative()) continue;
        std::size_t rejections = 0;
        std::size_t last = 0;
        for (std::size_t f = 0; f < forms.size(); ++f) {
            if (forms[f].evaluate(x) < 0) {
                ++rejections;
                last = f;
                if (rejections > 1) break;
            }
        }
        if (rejections == 1) sole_rejector[last] = true;
    }
    std::vector<std::size_t> redundant;
    for (std::size_t f = 0; f < forms.size(); ++f)
        if (!sole_rejector[f]) redundant.push_back(f);
    return redundant;
}

MembershipResult cone_member(const ZSeq& x, const std::vector<LinearForm>& forms) {
    MembershipResult result;
    if (!x.nonnegative()) {
        result.member = false;
        return result;
    }
    for (const LinearForm& form : forms) {
        if (form.evaluate(x) < 0) {
            result.member = false;
            result.violated = form;
            return result;
        }
    }
    result.member = true;
    return result;
}

} // namespace crystalcone
