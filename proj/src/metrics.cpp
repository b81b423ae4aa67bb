#include "sofd/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace sofd {

double ErrorTrace::final_value() const {
    if (value.empty()) throw std::logic_error("ErrorTrace: empty");
    return value.back();
}

void ErrorTrace::validate() const {
    if (t.size() != value.size()) throw std::invalid_argument("ErrorTrace: size mismatch");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw std::invalid_argument("ErrorTrace: times not strictly increasing");
    for (double v : value)
        if (!(v >= 0.0)) throw std::invalid_argument("ErrorTrace: negative value");
}

double mean_abs_error(std::span<const double> numeric, std::span<const double> exact,
                      double normalizer) {
    if (numeric.size() != exact.size()) throw std::invalid_argument("mean_abs_error: length mismatch");
    if (!(normalizer > 0.0)) throw std::invalid_argument("mean_abs_error: normalizer must be positive");
    if (numeric.empty()) throw std::invalid_argument("mean_abs_error: empty input");
    double s = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) s += std::abs(numeric[i] - exact[i]);
    return s / (normalizer * static_cast<double>(numeric.size()));
}

double pct_better(const ErrorTrace& a, const ErrorTrace& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pct_better: traces have different lengths");
    if (a.size() == 0) throw std::invalid_argument("pct_better: empty traces");
    std::size_t better = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.t[i] - b.t[i]) > 1e-9 * std::max(1.0, std::abs(a.t[i])))
            throw std::invalid_argument("pct_better: sample times not aligned");
        if (a.value[i] < b.value[i]) ++better;
    }
    return static_cast<double>(better) / static_cast<double>(a.size());
}

}  // namespace sofd
