#include "citnet/numeric.hpp"

#include "citnet/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace citnet {

namespace mp = boost::multiprecision;

std::string_view to_string(NumericMode mode) {
    switch (mode) {
        case NumericMode::Float: return "float";
        case NumericMode::ExactInteger: return "exact";
        case NumericMode::LogSpace: return "log";
    }
    return "?";
}

std::optional<NumericMode> parse_numeric_mode(std::string_view text) {
    if (text == "float") return NumericMode::Float;
    if (text == "exact") return NumericMode::ExactInteger;
    if (text == "log") return NumericMode::LogSpace;
    return std::nullopt;
}

double log_of(const BigInt& value) {
    if (value.is_zero()) return -std::numeric_limits<double>::infinity();
    if (value.sign() < 0) return std::numeric_limits<double>::quiet_NaN();
    const std::size_t bits = mp::msb(value) + 1;
    if (bits <= 1000) return std::log(value.convert_to<double>());
    const std::size_t shift = bits - 64;
    const BigInt top = value >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

bool nearly_equal(double a, double b, double rel_eps) {
    if (a == b) return true;
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    return std::fabs(a - b) <= rel_eps * std::max(std::fabs(a), std::fabs(b));
}

std::string format_real(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

double Count::to_double() const {
    switch (mode) {
        case NumericMode::Float: return real;
        case NumericMode::LogSpace: return std::exp(real);
        case NumericMode::ExactInteger: return citnet::to_double(exact);
    }
    return real;
}

double Count::to_log() const {
    switch (mode) {
        case NumericMode::Float: return std::log(real);
        case NumericMode::LogSpace: return real;
        case NumericMode::ExactInteger: return log_of(exact);
    }
    return real;
}

std::string Count::str() const {
    if (mode == NumericMode::ExactInteger) return exact.str();
    return format_real(real);
}

WeightVector::WeightVector(std::vector<double> reals, NumericMode mode) : mode_(mode), reals_(std::move(reals)) {
    if (mode == NumericMode::ExactInteger) throw ArgumentError("exact weights need integer storage");
}

WeightVector::WeightVector(std::vector<BigInt> exact) : mode_(NumericMode::ExactInteger), exact_(std::move(exact)) {}

Count WeightVector::at(std::size_t i) const {
    Count c;
    c.mode = mode_;
    if (mode_ == NumericMode::ExactInteger) {
        c.exact = exact_.at(i);
    } else {
        c.real = reals_.at(i);
    }
    return c;
}

double WeightVector::to_double(std::size_t i) const {
    switch (mode_) {
        case NumericMode::Float: return reals_[i];
        case NumericMode::LogSpace: return std::exp(reals_[i]);
        case NumericMode::ExactInteger: return citnet::to_double(exact_[i]);
    }
    return 0.0;
}

double WeightVector::to_log(std::size_t i) const {
    switch (mode_) {
        case NumericMode::Float: return std::log(reals_[i]);
        case NumericMode::LogSpace: return reals_[i];
        case NumericMode::ExactInteger: return log_of(exact_[i]);
    }
    return 0.0;
}

std::string WeightVector::str(std::size_t i) const {
    if (mode_ == NumericMode::ExactInteger) return exact_[i].str();
    return format_real(reals_[i]);
}

std::vector<double> WeightVector::to_doubles() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = to_double(i);
    return out;
}

int WeightVector::compare(std::size_t i, std::size_t j) const {
    if (mode_ == NumericMode::ExactInteger) {
        const int c = exact_[i].compare(exact_[j]);
        return (c > 0) - (c < 0);
    }
    const double a = reals_[i];
    const double b = reals_[j];
    return a < b ? -1 : (a > b ? 1 : 0);
}

int WeightVector::compare_to(std::size_t i, double value) const {
    switch (mode_) {
        case NumericMode::Float: {
            const double a = reals_[i];
            return a < value ? -1 : (a > value ? 1 : 0);
        }
        case NumericMode::LogSpace: {
            if (value <= 0.0) return 1;
            const double a = reals_[i];
            const double b = std::log(value);
            return a < b ? -1 : (a > b ? 1 : 0);
        }
        case NumericMode::ExactInteger: {
            const mp::cpp_rational lhs(exact_[i]);
            const mp::cpp_rational rhs(value);
            return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        }
    }
    return 0;
}

bool WeightVector::nearly_equal(std::size_t i, std::size_t j, double rel_eps) const {
    switch (mode_) {
        case NumericMode::ExactInteger: return exact_[i] == exact_[j];
        case NumericMode::Float: return citnet::nearly_equal(reals_[i], reals_[j], rel_eps);
        case NumericMode::LogSpace: {
            // relative tolerance on values is an absolute tolerance on logarithms
            const double a = reals_[i];
            const double b = reals_[j];
            if (a == b) return true;
            return std::isfinite(a) && std::isfinite(b) && std::fabs(a - b) <= rel_eps;
        }
    }
    return false;
}

WeightVector WeightVector::prefix(std::size_t count) const {
    if (count > size()) throw ArgumentError("prefix longer than weight vector");
    if (mode_ == NumericMode::ExactInteger) return WeightVector(std::vector<BigInt>(exact_.begin(), exact_.begin() + count));
    return WeightVector(std::vector<double>(reals_.begin(), reals_.begin() + count), mode_);
}

WeightVector WeightVector::select(std::span<const std::uint32_t> indices) const {
    if (mode_ == NumericMode::ExactInteger) {
        std::vector<BigInt> out;
        out.reserve(indices.size());
        for (auto i : indices) out.push_back(exact_.at(i));
        return WeightVector(std::move(out));
    }
    std::vector<double> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(reals_.at(i));
    return WeightVector(std::move(out), mode_);
}

std::optional<std::size_t> WeightVector::argmax() const {
    if (empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t i = 1; i < size(); ++i) {
        if (compare(i, best) > 0) best = i;
    }
    return best;
}

}  // namespace citnet
