#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/segment.hpp"

namespace mseg {

/// φ_a: integer -> number of segments covering it. Zero entries are never stored.
using WeightFunction = std::map<int, int>;

/// Multiset of segments kept sorted descending for ⪯ (largest first).
/// Two multisegments are equal iff their sorted vectors are equal.
class Multisegment {
public:
    Multisegment() = default;
    Multisegment(std::initializer_list<Segment> segs) : segs_(segs) { canonicalize(); }
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) { canonicalize(); }

    const std::vector<Segment>& segments() const { return segs_; }
    std::size_t size() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }
    const Segment& operator[](std::size_t i) const { return segs_[i]; }
    auto begin() const { return segs_.begin(); }
    auto end() const { return segs_.end(); }

    bool operator==(const Multisegment&) const = default;
    // Key order only.
    bool operator<(const Multisegment& o) const { return segs_ < o.segs_; }

    int degree() const {
        int d = 0;
        for (const auto& s : segs_) d += s.length();
        return d;
    }

    WeightFunction weight() const {
        WeightFunction w;
        for (const auto& s : segs_)
            for (int k = s.begin; k <= s.end; ++k) ++w[k];
        return w;
    }

    /// φ_a(k), zero outside the support.
    int weight_at(int k) const {
        int n = 0;
        for (const auto& s : segs_) n += s.contains(k) ? 1 : 0;
        return n;
    }

    /// e(a) and b(a) as sorted multisets.
    std::vector<int> ends() const {
        std::vector<int> v;
        for (const auto& s : segs_) v.push_back(s.end);
        std::sort(v.begin(), v.end());
        return v;
    }
    std::vector<int> begins() const {
        std::vector<int> v;
        for (const auto& s : segs_) v.push_back(s.begin);
        std::sort(v.begin(), v.end());
        return v;
    }

    /// ℓ_{a,k}
    int count_ending_at(int k) const {
        return static_cast<int>(std::count_if(segs_.begin(), segs_.end(),
                                              [k](const Segment& s) { return s.end == k; }));
    }
    int count_beginning_at(int k) const {
        return static_cast<int>(std::count_if(segs_.begin(), segs_.end(),
                                              [k](const Segment& s) { return s.begin == k; }));
    }

    int count(const Segment& s) const {
        return static_cast<int>(std::count(segs_.begin(), segs_.end(), s));
    }

    Multisegment with(const Segment& s) const {
        Multisegment r = *this;
        r.insert(s);
        return r;
    }

    Multisegment operator+(const Multisegment& o) const {
        std::vector<Segment> v = segs_;
        v.insert(v.end(), o.segs_.begin(), o.segs_.end());
        return Multisegment(std::move(v));
    }

    /// Replaces the linked pair at positions i, j by union and (nonempty) intersection.
    Multisegment elementary_operation(std::size_t i, std::size_t j) const {
        if (i >= segs_.size() || j >= segs_.size() || i == j)
            throw DomainError("elementary_operation: bad indices");
        const Segment& d1 = segs_[i];
        const Segment& d2 = segs_[j];
        if (!linked(d1, d2))
            throw DomainError("elementary_operation: " + d1.to_string() + " and " + d2.to_string() +
                              " are not linked");
        std::vector<Segment> v;
        v.reserve(segs_.size());
        for (std::size_t t = 0; t < segs_.size(); ++t)
            if (t != i && t != j) v.push_back(segs_[t]);
        v.push_back(hull(d1, d2));
        if (auto x = intersection(d1, d2)) v.push_back(*x);
        return Multisegment(std::move(v));
    }

    /// Calls f(i, j) for every unordered linked pair i < j (by position).
    template <class F>
    void for_each_linked_pair(F&& f) const {
        for (std::size_t i = 0; i < segs_.size(); ++i)
            for (std::size_t j = i + 1; j < segs_.size(); ++j)
                if (linked(segs_[i], segs_[j])) f(i, j);
    }

    bool has_linked_pair() const {
        bool found = false;
        for_each_linked_pair([&](std::size_t, std::size_t) { found = true; });
        return found;
    }

    bool is_regular() const {
        auto b = begins(), e = ends();
        return std::adjacent_find(b.begin(), b.end()) == b.end() &&
               std::adjacent_find(e.begin(), e.end()) == e.end();
    }

    bool is_symmetric() const {
        if (!is_regular()) return false;
        if (segs_.empty()) return true;
        auto b = begins(), e = ends();
        return b.back() <= e.front();
    }

    Multisegment transformed(const std::function<Segment(const Segment&)>& f) const {
        std::vector<Segment> v;
        v.reserve(segs_.size());
        for (const auto& s : segs_) v.push_back(f(s));
        return Multisegment(std::move(v));
    }

    Multisegment reflected() const { return transformed(reflect); }
    Multisegment shifted(int t) const {
        return transformed([t](const Segment& s) { return Segment{s.begin + t, s.end + t}; });
    }

    std::string to_string() const {
        std::string r = "{";
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            if (i) r += ",";
            r += segs_[i].to_string();
        }
        return r + "}";
    }

private:
    void insert(const Segment& s) {
        auto pos = std::find_if(segs_.begin(), segs_.end(),
                                [&](const Segment& t) { return precedes(t, s); });
        segs_.insert(pos, s);
    }

    void canonicalize() {
        for (const auto& s : segs_)
            if (s.begin > s.end) throw DomainError("empty segment " + s.to_string());
        std::sort(segs_.begin(), segs_.end(),
                  [](const Segment& x, const Segment& y) { return precedes(y, x); });
    }

    std::vector<Segment> segs_;
};

inline Multisegment elementary_operation(const Multisegment& a, std::size_t i, std::size_t j) {
    return a.elementary_operation(i, j);
}

inline WeightFunction weight(const Multisegment& a) { return a.weight(); }
inline bool is_regular(const Multisegment& a) { return a.is_regular(); }
inline bool is_symmetric(const Multisegment& a) { return a.is_symmetric(); }

/// Every elementary operation applicable to a, one result per linked pair (duplicates possible).
inline std::vector<Multisegment> elementary_children(const Multisegment& a) {
    std::vector<Multisegment> out;
    a.for_each_linked_pair([&](std::size_t i, std::size_t j) { out.push_back(a.elementary_operation(i, j)); });
    return out;
}

}  // namespace mseg

template <>
struct std::hash<mseg::Multisegment> {
    std::size_t operator()(const mseg::Multisegment& a) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& s : a) {
            h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(s.begin))) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(s.end))) * 1099511628211ull;
        }
        return h;
    }
};
