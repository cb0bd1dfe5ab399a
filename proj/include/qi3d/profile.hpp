#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace qi3d {

/// Scalar profile function with derivative access. Profiles defined without a
/// derivative are differentiated by central differences with step
/// h = eps^(1/3) (1 + |s|).
class Profile {
public:
    Profile() = default;
    Profile(std::function<double(double)> f, std::function<double(double)> df)
        : f_(std::move(f)), df_(std::move(df)) {}
    explicit Profile(std::function<double(double)> f) : f_(std::move(f)) {}

    static Profile constant(double c) {
        return Profile([c](double) { return c; }, [](double) { return 0.0; });
    }
    static Profile zero() { return constant(0.0); }

    /// Polynomial with coefficients in ascending order: c0 + c1 s + c2 s^2 + ...
    static Profile polynomial(std::vector<double> coeffs);

    /// Parse a restricted expression over the symbol `s`: numbers, + - * / ^,
    /// parentheses, unary minus; exponents are integers.
    static Profile parse(const std::string& expr);

    bool defined() const { return static_cast<bool>(f_); }
    double operator()(double s) const { return f_(s); }
    double value(double s) const { return f_(s); }
    double derivative(double s) const;

private:
    std::function<double(double)> f_;
    std::function<double(double)> df_;
};

}  // namespace qi3d
