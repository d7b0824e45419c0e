#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/poset.hpp"
#include "multiseg/truncation.hpp"

namespace mseg {

/// a^sym with the descent data recovering a:
/// b = (a^sym)^(c3), a = (^(c2) b)^(c1).
struct SymmetrizationData {
    Multisegment original;
    Multisegment ordinary;
    Multisegment symmetric;
    Multisegment c1;  // end side, ordinarization
    Multisegment c2;  // begin side, ordinarization
    Multisegment c3;  // end side, symmetric stage

    /// Truncation order taking symmetric back to original.
    CompositePath path() const {
        return {DescentPath::of_multisegment(c3, Side::End), DescentPath::of_multisegment(c2, Side::Begin),
                DescentPath::of_multisegment(c1, Side::End)};
    }
};

namespace detail {

/// Removes duplicate ends one at a time; returns (regular-in-ends result, recorded segments).
inline std::pair<Multisegment, Multisegment> separate_ends(const Multisegment& a) {
    std::vector<Segment> segs = a.segments();
    std::vector<Segment> rec;
    for (;;) {
        std::vector<int> ends;
        for (const auto& s : segs) ends.push_back(s.end);
        std::sort(ends.begin(), ends.end());
        auto dup = std::adjacent_find(ends.begin(), ends.end());
        if (dup == ends.end()) break;
        const int e = *dup;
        std::set<int> present(ends.begin(), ends.end());
        int ell = e + 1;
        while (present.count(ell)) ++ell;

        // longest segment ending at e
        std::size_t pick = segs.size();
        for (std::size_t i = 0; i < segs.size(); ++i)
            if (segs[i].end == e && (pick == segs.size() || segs[i].begin < segs[pick].begin)) pick = i;
        for (std::size_t i = 0; i < segs.size(); ++i)
            if (i == pick || (segs[i].end > e && segs[i].end < ell)) segs[i] = extend_end(segs[i]);
        rec.push_back({e + 1, ell});
    }
    return {Multisegment(std::move(segs)), Multisegment(std::move(rec))};
}

}  // namespace detail

/// Regular b and (c1, c2) with a = (^(c2) b)^(c1).
inline std::tuple<Multisegment, Multisegment, Multisegment> ordinarize(const Multisegment& a) {
    auto [a1, c1] = detail::separate_ends(a);
    auto [rb, rc2] = detail::separate_ends(a1.reflected());
    Multisegment b = rb.reflected(), c2 = rc2.reflected();

    detail::ensure(b.is_regular(), "ordinarize: result not regular: " + b.to_string());
    CompositePath p{DescentPath::of_multisegment(c2, Side::Begin), DescentPath::of_multisegment(c1, Side::End)};
    detail::ensure(truncate_path(b, p) == a, "ordinarize: round trip failed for " + a.to_string());
    detail::ensure(in_descent_path(b, b, p), "ordinarize: result outside its own descent set");
    return {b, c1, c2};
}

/// Symmetric b^sym and c3 with b = (b^sym)^(c3). Only ends move.
inline std::pair<Multisegment, Multisegment> symmetrize_ordinary(const Multisegment& b) {
    if (!b.is_regular()) throw DomainError("symmetrize_ordinary: not regular: " + b.to_string());
    std::vector<Segment> segs = b.segments();
    std::vector<Segment> rec;
    for (;;) {
        if (segs.empty()) break;
        int max_begin = segs[0].begin, min_end = segs[0].end;
        std::set<int> ends;
        for (const auto& s : segs) {
            max_begin = std::max(max_begin, s.begin);
            min_end = std::min(min_end, s.end);
            ends.insert(s.end);
        }
        if (max_begin <= min_end) break;
        const int e = min_end;
        int ell = e + 1;
        while (ends.count(ell)) ++ell;
        for (auto& s : segs)
            if (s.end >= e && s.end < ell) s = extend_end(s);
        rec.push_back({e + 1, ell});
    }
    Multisegment sym(std::move(segs)), c3(std::move(rec));

    detail::ensure(sym.is_symmetric(), "symmetrize_ordinary: result not symmetric");
    auto p = DescentPath::of_multisegment(c3, Side::End);
    detail::ensure(truncate_path(sym, p) == b, "symmetrize_ordinary: round trip failed for " + b.to_string());
    detail::ensure(in_descent_path(sym, sym, p), "symmetrize_ordinary: result outside its own descent set");
    return {sym, c3};
}

inline SymmetrizationData symmetrize(const Multisegment& a) {
    SymmetrizationData d;
    d.original = a;
    std::tie(d.ordinary, d.c1, d.c2) = ordinarize(a);
    std::tie(d.symmetric, d.c3) = symmetrize_ordinary(d.ordinary);

    detail::ensure(d.symmetric.size() == d.ordinary.size(), "symmetrize: segment count changed");
    detail::ensure(truncate_path(d.symmetric, d.path()) == a, "symmetrize: round trip failed");
    detail::ensure(in_descent_path(d.symmetric, d.symmetric, d.path()), "symmetrize: membership failed");
    return d;
}

/// b^sym: the unique element of the descent set of a^sym truncating to b.
/// Searches all of S(a^sym).
inline Multisegment lift(const SymmetrizationData& data, const Multisegment& b, std::size_t cap = kDefaultPosetCap) {
    if (!leq_rank(b, data.original))
        throw DomainError("lift: " + b.to_string() + " is not below " + data.original.to_string());
    const auto path = data.path();
    std::vector<Multisegment> hits;
    for (const auto& c : generate_poset(data.symmetric, cap).elements)
        if (truncate_path(c, path) == b && in_descent_path(c, data.symmetric, path)) hits.push_back(c);
    detail::ensure(hits.size() == 1, "lift: " + std::to_string(hits.size()) + " lifts of " + b.to_string());
    return hits.front();
}

/// Same value as lift, inverting one truncation step at a time.
inline Multisegment lift_stepwise(const SymmetrizationData& data, const Multisegment& b) {
    if (!leq_rank(b, data.original))
        throw DomainError("lift: " + b.to_string() + " is not below " + data.original.to_string());
    return psi_path_inverse(data.symmetric, data.path(), b);
}

}  // namespace mseg
