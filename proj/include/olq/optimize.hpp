#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace olq {

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Golden-section minimization of a unimodal function on [a, b]. Deterministic:
// fixed bracket, fixed shrink ratio, no stochastic restarts.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double a, double b, double x_tol,
                                      int max_iterations = 300) {
    if (!(b > a)) throw std::invalid_argument("golden_section_minimize: empty bracket");
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2

    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);

    ScalarMinimum result;
    for (result.iterations = 0; result.iterations < max_iterations; ++result.iterations) {
        if (b - a < x_tol) {
            result.converged = true;
            break;
        }
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if (fc < fd) {
        result.x = c;
        result.value = fc;
    } else {
        result.x = d;
        result.value = fd;
    }
    return result;
}

}  // namespace olq
