#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace heckeq {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;

// Thrown when a series or quadrature cannot reach the accuracy it was asked for.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on report/file I/O problems (mapped to its own CLI exit code).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Accuracy contract for truncated series. A value is accepted only when the
// estimated tail is at most max(abs_tol, rel_tol * |partial sum|).
struct Precision {
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
    long max_terms = 2000000;
};

// A computed value together with an error or tail estimate.
struct ValueWithError {
    cplx value{};
    double error = 0.0;
};

inline void require_finite(const cplx& z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw precision_error(std::string(where) + ": non-finite value encountered");
}

}  // namespace heckeq
