#include "chebrec/chebyshev.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chebrec {

namespace {

double clamp_unit(double x, const char* what) {
    if (x > 1.0) {
        if (x - 1.0 > kDomainClampTol)
            throw std::domain_error(std::string(what) + ": argument " + std::to_string(x) +
                                    " outside [-1, 1]; rescale the input first");
        return 1.0;
    }
    if (x < -1.0) {
        if (-1.0 - x > kDomainClampTol)
            throw std::domain_error(std::string(what) + ": argument " + std::to_string(x) +
                                    " outside [-1, 1]; rescale the input first");
        return -1.0;
    }
    return x;
}

// Antiderivative of T_n at x. The n >= 2 formula is singular at n = 1, so
// degrees 0 and 1 are explicit base cases.
double antiderivative(int degree, double x) {
    if (degree == 0) return x;
    if (degree == 1) return 0.5 * x * x;
    double prev = 1.0;  // T_0
    double cur = x;     // T_1
    for (int n = 1; n < degree; ++n) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    const double t_next = 2.0 * x * cur - prev; // T_{degree+1}
    return 0.5 * (t_next / (degree + 1) - prev / (degree - 1));
}

} // namespace

double cheb_eval(int degree, double x) {
    if (degree < 0) throw std::invalid_argument("cheb_eval: degree must be non-negative");
    x = clamp_unit(x, "cheb_eval");
    if (degree == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int n = 1; n < degree; ++n) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> cheb_eval_all(int count, double x) {
    if (count < 1) throw std::invalid_argument("cheb_eval_all: count must be positive");
    x = clamp_unit(x, "cheb_eval_all");
    std::vector<double> values(static_cast<std::size_t>(count));
    values[0] = 1.0;
    if (count > 1) values[1] = x;
    for (int n = 2; n < count; ++n)
        values[n] = 2.0 * x * values[n - 1] - values[n - 2];
    return values;
}

double segment_integral(int degree, double a, double b) {
    if (degree < 0) throw std::invalid_argument("segment_integral: degree must be non-negative");
    if (a > b) throw std::invalid_argument("segment_integral: requires a <= b");
    a = clamp_unit(a, "segment_integral");
    b = clamp_unit(b, "segment_integral");
    return antiderivative(degree, b) - antiderivative(degree, a);
}

std::vector<double> segment_integral_all(int count, double a, double b) {
    if (count < 1) throw std::invalid_argument("segment_integral_all: count must be positive");
    if (a > b) throw std::invalid_argument("segment_integral_all: requires a <= b");
    a = clamp_unit(a, "segment_integral_all");
    b = clamp_unit(b, "segment_integral_all");
    // One recurrence pass per endpoint up to T_count covers every degree < count.
    const std::vector<double> ta = cheb_eval_all(count + 1, a);
    const std::vector<double> tb = cheb_eval_all(count + 1, b);
    std::vector<double> out(static_cast<std::size_t>(count));
    out[0] = b - a;
    if (count > 1) out[1] = 0.5 * (b * b - a * a);
    for (int n = 2; n < count; ++n)
        out[n] = 0.5 * ((tb[n + 1] - ta[n + 1]) / (n + 1) - (tb[n - 1] - ta[n - 1]) / (n - 1));
    return out;
}

std::vector<double> rescale_spectrum(const std::vector<double>& raw_energies,
                                     double e0, double emax) {
    if (!(e0 < emax)) throw std::invalid_argument("rescale_spectrum: requires e0 < emax");
    std::vector<double> out;
    out.reserve(raw_energies.size());
    const double shift = e0 + emax;
    const double span = emax - e0;
    for (double e : raw_energies) {
        if (e < e0 || e > emax)
            throw std::domain_error("rescale_spectrum: energy " + std::to_string(e) +
                                    " outside [" + std::to_string(e0) + ", " +
                                    std::to_string(emax) + "]");
        out.push_back((2.0 * e - shift) / span);
    }
    return out;
}

} // namespace chebrec
