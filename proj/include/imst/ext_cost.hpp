#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace imst {

// Edge-cost value extended with a single +infinity element. Infinity is a
// distinct state, not a saturated integer: reading the numeric value of an
// infinite ExtCost throws instead of returning a sentinel.
class ExtCost {
public:
    constexpr ExtCost() : ExtCost(0) {}
    constexpr ExtCost(std::int64_t v) : infinite_(false), value_(v) {}

    static constexpr ExtCost infinity() {
        ExtCost c;
        c.infinite_ = true;
        c.value_ = 0;
        return c;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    constexpr std::int64_t value() const {
        if (infinite_) {
            throw std::logic_error("ExtCost: value() called on infinity");
        }
        return value_;
    }

    // inf + x = inf
    friend constexpr ExtCost operator+(ExtCost a, ExtCost b) {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return ExtCost(a.value_ + b.value_);
    }

    ExtCost& operator+=(ExtCost o) { return *this = *this + o; }

    // Infinity compares greater than every finite value and equal to itself.
    friend constexpr bool operator==(ExtCost a, ExtCost b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtCost a, ExtCost b) {
        if (a.infinite_ && b.infinite_) {
            return std::strong_ordering::equal;
        }
        if (a.infinite_) {
            return std::strong_ordering::greater;
        }
        if (b.infinite_) {
            return std::strong_ordering::less;
        }
        return a.value_ <=> b.value_;
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    bool infinite_;
    std::int64_t value_;
};

}  // namespace imst
