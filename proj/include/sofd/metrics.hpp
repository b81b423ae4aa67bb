#pragma once

#include <span>
#include <string>
#include <vector>

namespace sofd {

/// Normalized error samples over time; t strictly increasing, values >= 0.
struct ErrorTrace {
    std::string label;
    std::vector<double> t;
    std::vector<double> value;

    std::size_t size() const { return t.size(); }
    double final_value() const;
    void validate() const;
};

/// Mean over points of |numeric - exact| / normalizer.
double mean_abs_error(std::span<const double> numeric, std::span<const double> exact,
                      double normalizer);

/// Fraction of aligned samples where a's value is strictly below b's
/// (ties count as not-better). Sample times must coincide.
double pct_better(const ErrorTrace& a, const ErrorTrace& b);

}  // namespace sofd
