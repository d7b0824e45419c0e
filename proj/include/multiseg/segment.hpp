#pragma once

#include <compare>
#include <optional>
#include <string>

namespace mseg {

/// Closed integer interval [begin, end]; never empty.
struct Segment {
    int begin = 0;
    int end = 0;

    /// Structural order used for container keys; unrelated to `precedes`.
    constexpr auto operator<=>(const Segment&) const = default;

    constexpr int length() const { return end - begin + 1; }
    constexpr bool contains(int k) const { return begin <= k && k <= end; }
    constexpr bool contains(const Segment& other) const {
        return begin <= other.begin && other.end <= end;
    }

    static constexpr Segment point(int k) { return {k, k}; }

    std::string to_string() const {
        if (begin == end) return "[" + std::to_string(begin) + "]";
        return "[" + std::to_string(begin) + "," + std::to_string(end) + "]";
    }
};

/// Builds [begin, end], or nothing when begin > end.
constexpr std::optional<Segment> make_segment(int begin, int end) {
    if (begin > end) return std::nullopt;
    return Segment{begin, end};
}

/// Strict order: d1 ≺ d2 iff e(d1) < e(d2), or equal ends and b(d1) > b(d2).
constexpr bool precedes(const Segment& d1, const Segment& d2) {
    if (d1.end != d2.end) return d1.end < d2.end;
    return d1.begin > d2.begin;
}

constexpr bool precedes_or_equal(const Segment& d1, const Segment& d2) {
    return d1 == d2 || precedes(d1, d2);
}

/// Union is an interval different from both inputs.
constexpr bool linked(const Segment& d1, const Segment& d2) {
    if (d1.contains(d2) || d2.contains(d1)) return false;
    // Disjoint with a gap: union is not an interval.
    return d1.begin <= d2.end + 1 && d2.begin <= d1.end + 1;
}

/// Linked with empty intersection.
constexpr bool juxtaposed(const Segment& d1, const Segment& d2) {
    return d1.end + 1 == d2.begin || d2.end + 1 == d1.begin;
}

constexpr std::optional<Segment> intersection(const Segment& d1, const Segment& d2) {
    return make_segment(d1.begin > d2.begin ? d1.begin : d2.begin,
                        d1.end < d2.end ? d1.end : d2.end);
}

/// Hull of the two; equals the set union when they are linked.
constexpr Segment hull(const Segment& d1, const Segment& d2) {
    return {d1.begin < d2.begin ? d1.begin : d2.begin, d1.end > d2.end ? d1.end : d2.end};
}

// Δ⁻, ⁻Δ, Δ⁺, ⁺Δ
constexpr std::optional<Segment> drop_end(const Segment& d) { return make_segment(d.begin, d.end - 1); }
constexpr std::optional<Segment> drop_begin(const Segment& d) { return make_segment(d.begin + 1, d.end); }
constexpr Segment extend_end(const Segment& d) { return {d.begin, d.end + 1}; }
constexpr Segment extend_begin(const Segment& d) { return {d.begin - 1, d.end}; }

/// Mirror image under k -> -k.
constexpr Segment reflect(const Segment& d) { return {-d.end, -d.begin}; }

}  // namespace mseg
