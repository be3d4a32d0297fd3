#pragma once

// Arithmetic policies that let one path-counting routine run in every
// NumericMode. Internal to the library.

#include "citnet/errors.hpp"
#include "citnet/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace citnet::detail {

struct LogNum {
    double ln = -std::numeric_limits<double>::infinity();
};

template <class T>
struct Arith;

template <>
struct Arith<double> {
    static constexpr NumericMode mode = NumericMode::Float;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_count(std::uint64_t c) { return static_cast<double>(c); }
    static double from_real(double r) { return r; }
    static double add(double a, double b) { return a + b; }
    static double mul(double a, double b) { return a * b; }
    static bool less(double a, double b) { return a < b; }
    static bool near(double a, double b, double eps) { return nearly_equal(a, b, eps); }
    static WeightVector pack(std::vector<double> v) {
        for (double x : v) {
            if (!std::isfinite(x)) {
                throw OverflowError("path counts overflow 64-bit floating point; rerun in log or exact mode");
            }
        }
        return WeightVector(std::move(v), NumericMode::Float);
    }
    static Count count(double x) { return Count{NumericMode::Float, x, {}}; }
};

template <>
struct Arith<BigInt> {
    static constexpr NumericMode mode = NumericMode::ExactInteger;
    static BigInt zero() { return 0; }
    static BigInt one() { return 1; }
    static BigInt from_count(std::uint64_t c) { return BigInt(c); }
    static BigInt from_real(double) { throw ArgumentError("real-valued factors are not available in exact mode"); }
    static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
    static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    static bool less(const BigInt& a, const BigInt& b) { return a < b; }
    static bool near(const BigInt& a, const BigInt& b, double) { return a == b; }
    static WeightVector pack(std::vector<BigInt> v) { return WeightVector(std::move(v)); }
    static Count count(const BigInt& x) { return Count{NumericMode::ExactInteger, 0.0, x}; }
};

template <>
struct Arith<LogNum> {
    static constexpr NumericMode mode = NumericMode::LogSpace;
    static LogNum zero() { return {}; }
    static LogNum one() { return {0.0}; }
    static LogNum from_count(std::uint64_t c) { return {std::log(static_cast<double>(c))}; }
    static LogNum from_real(double r) { return {std::log(r)}; }
    static LogNum add(LogNum a, LogNum b) {
        if (std::isinf(a.ln) && a.ln < 0) return b;
        if (std::isinf(b.ln) && b.ln < 0) return a;
        const double hi = std::max(a.ln, b.ln);
        const double lo = std::min(a.ln, b.ln);
        return {hi + std::log1p(std::exp(lo - hi))};
    }
    static LogNum mul(LogNum a, LogNum b) { return {a.ln + b.ln}; }
    static bool less(LogNum a, LogNum b) { return a.ln < b.ln; }
    static bool near(LogNum a, LogNum b, double eps) {
        return a.ln == b.ln || (std::isfinite(a.ln) && std::isfinite(b.ln) && std::fabs(a.ln - b.ln) <= eps);
    }
    static WeightVector pack(const std::vector<LogNum>& v) {
        std::vector<double> out(v.size());
        std::transform(v.begin(), v.end(), out.begin(), [](LogNum x) { return x.ln; });
        return WeightVector(std::move(out), NumericMode::LogSpace);
    }
    static Count count(LogNum x) { return Count{NumericMode::LogSpace, x.ln, {}}; }
};

// Reads entry i of a WeightVector into the matching arithmetic type.
template <class T>
T load(const WeightVector& w, std::size_t i);

template <>
inline double load<double>(const WeightVector& w, std::size_t i) {
    return w.to_double(i);
}
template <>
inline BigInt load<BigInt>(const WeightVector& w, std::size_t i) {
    return w.exact()[i];
}
template <>
inline LogNum load<LogNum>(const WeightVector& w, std::size_t i) {
    return {w.to_log(i)};
}

// Calls f.template operator()<T>() with the arithmetic type for `mode`.
template <class F>
decltype(auto) dispatch(NumericMode mode, F&& f) {
    switch (mode) {
        case NumericMode::ExactInteger: return f.template operator()<BigInt>();
        case NumericMode::LogSpace: return f.template operator()<LogNum>();
        case NumericMode::Float: break;
    }
    return f.template operator()<double>();
}

}  // namespace citnet::detail
