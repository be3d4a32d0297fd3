#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citnet {

using BigInt = boost::multiprecision::cpp_int;

// How path counts are represented.
//   Float        - IEEE double; overflow to infinity is reported as OverflowError.
//   ExactInteger - arbitrary precision integers.
//   LogSpace     - natural logarithm of the count; zero is -infinity.
enum class NumericMode { Float, ExactInteger, LogSpace };

std::string_view to_string(NumericMode mode);
std::optional<NumericMode> parse_numeric_mode(std::string_view text);

// One value in some numeric mode.
struct Count {
    NumericMode mode = NumericMode::Float;
    double real = 0.0;  // value (Float) or its logarithm (LogSpace)
    BigInt exact;       // ExactInteger only

    double to_double() const;
    double to_log() const;
    std::string str() const;
};

// Values aligned with the arcs or vertices of some network, stored in one
// numeric mode. In LogSpace the stored reals are natural logarithms.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<double> reals, NumericMode mode = NumericMode::Float);
    explicit WeightVector(std::vector<BigInt> exact);

    NumericMode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return mode_ == NumericMode::ExactInteger ? exact_.size() : reals_.size(); }
    bool empty() const noexcept { return size() == 0; }

    Count at(std::size_t i) const;
    // Plain value; may be +inf for huge LogSpace or ExactInteger entries.
    double to_double(std::size_t i) const;
    double to_log(std::size_t i) const;
    std::string str(std::size_t i) const;

    // Raw storage: values (Float) or logarithms (LogSpace).
    const std::vector<double>& reals() const noexcept { return reals_; }
    const std::vector<BigInt>& exact() const noexcept { return exact_; }

    // Every entry as a plain double.
    std::vector<double> to_doubles() const;

    // -1, 0, 1 comparing entries i and j (exact in every mode).
    int compare(std::size_t i, std::size_t j) const;
    // -1, 0, 1 comparing entry i with a plain real.
    int compare_to(std::size_t i, double value) const;
    // Equality within a relative tolerance (exact equality in ExactInteger mode).
    bool nearly_equal(std::size_t i, std::size_t j, double rel_eps) const;

    // First `count` entries.
    WeightVector prefix(std::size_t count) const;
    WeightVector select(std::span<const std::uint32_t> indices) const;

    // Index of the largest entry; first one wins ties.
    std::optional<std::size_t> argmax() const;

private:
    NumericMode mode_ = NumericMode::Float;
    std::vector<double> reals_;
    std::vector<BigInt> exact_;
};

// Natural logarithm of a nonnegative big integer; -inf for zero.
double log_of(const BigInt& value);
double to_double(const BigInt& value);

// Relative-tolerance comparison used for tie detection on floating values.
bool nearly_equal(double a, double b, double rel_eps);

// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

}  // namespace citnet
