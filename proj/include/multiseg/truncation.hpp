#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/poset.hpp"

namespace mseg {

enum class Side { End, Begin };

inline const char* side_name(Side s) { return s == Side::End ? "end" : "begin"; }

// a^(k): segments ending at k lose their last point.
inline Multisegment truncate_end(const Multisegment& a, int k) {
    std::vector<Segment> v;
    v.reserve(a.size());
    for (const auto& s : a) {
        if (s.end != k) {
            v.push_back(s);
        } else if (auto t = drop_end(s)) {
            v.push_back(*t);
        }
    }
    return Multisegment(std::move(v));
}

// ^(k)a, by mirroring.
inline Multisegment truncate_begin(const Multisegment& a, int k) {
    return truncate_end(a.reflected(), -k).reflected();
}

inline Multisegment truncate(const Multisegment& a, int k, Side side) {
    return side == Side::End ? truncate_end(a, k) : truncate_begin(a, k);
}

/// H_k: degree condition relative to a, and no linked pair in b with ends (k-1, k).
inline bool hypothesis_Hk(const Multisegment& b, const Multisegment& a, int k) {
    if (b.count_ending_at(k) != a.count_ending_at(k)) return false;
    for (const auto& x : b) {
        if (x.end != k - 1) continue;
        for (const auto& y : b)
            if (y.end == k && linked(x, y)) return false;
    }
    return true;
}

/// _kH: no linked pair in b with begins (k, k+1).
inline bool hypothesis_kH(const Multisegment& b, const Multisegment& a, int k) {
    return hypothesis_Hk(b.reflected(), a.reflected(), -k);
}

inline bool hypothesis(const Multisegment& b, const Multisegment& a, int k, Side side) {
    return side == Side::End ? hypothesis_Hk(b, a, k) : hypothesis_kH(b, a, k);
}

/// S(a)_k (or _kS(a)).
inline std::vector<Multisegment> descent_set(const Multisegment& a, int k, Side side = Side::End,
                                             std::size_t cap = kDefaultPosetCap) {
    std::vector<Multisegment> out;
    for (const auto& c : generate_poset(a, cap).elements)
        if (hypothesis(c, a, k, side)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

inline Multisegment psi_k(const Multisegment& c, int k) { return truncate_end(c, k); }

/// Unique c ∈ S(a)_k with c^(k) = d.
inline Multisegment psi_k_inverse(const Multisegment& a, int k, const Multisegment& d) {
    const Multisegment ak = truncate_end(a, k);
    if (!leq_rank(d, ak))
        throw DomainError(d.to_string() + " is not in S(" + ak.to_string() + ")");
    const int ell = a.count_ending_at(k);

    // distinct segments of d ending at k-1, with multiplicities
    std::vector<std::pair<Segment, int>> groups;
    for (const auto& s : d) {
        if (s.end != k - 1) continue;
        if (!groups.empty() && groups.back().first == s)
            ++groups.back().second;
        else
            groups.push_back({s, 1});
    }

    std::vector<Multisegment> hits;
    std::vector<int> pick(groups.size(), 0);
    // odometer over how many copies of each group get extended
    for (;;) {
        int used = 0;
        for (int p : pick) used += p;
        if (used <= ell) {
            std::vector<Segment> v;
            for (const auto& s : d)
                if (s.end != k - 1) v.push_back(s);
            for (std::size_t g = 0; g < groups.size(); ++g)
                for (int t = 0; t < groups[g].second; ++t)
                    v.push_back(t < pick[g] ? extend_end(groups[g].first) : groups[g].first);
            for (int t = used; t < ell; ++t) v.push_back(Segment::point(k));
            Multisegment c(std::move(v));
            if (leq_rank(c, a) && hypothesis_Hk(c, a, k)) hits.push_back(std::move(c));
        }
        std::size_t g = 0;
        while (g < groups.size() && pick[g] == groups[g].second) pick[g++] = 0;
        if (g == groups.size()) break;
        ++pick[g];
    }
    detail::ensure(hits.size() == 1, "psi_k_inverse: " + std::to_string(hits.size()) +
                                         " preimages of " + d.to_string() + " for a=" + a.to_string() +
                                         ", k=" + std::to_string(k));
    return hits.front();
}

inline Multisegment psi_k_inverse_begin(const Multisegment& a, int k, const Multisegment& d) {
    return psi_k_inverse(a.reflected(), -k, d.reflected()).reflected();
}

/// Explicit lift of (a^(k))_min satisfying H_k, by the three-case construction.
inline Multisegment minimal_lift(const Multisegment& a, int k) {
    const Multisegment m = minimal_element(truncate_end(a, k));
    const int ell = a.count_ending_at(k);
    const int phi_k = a.weight_at(k);
    const int phi_km1 = a.weight_at(k - 1);

    std::vector<Segment> a0, rest;
    for (const auto& s : m) (s.end == k - 1 ? a0 : rest).push_back(s);
    // m is stored largest-first, so a0 is longest-first already
    const int r = static_cast<int>(a0.size());
    detail::ensure(r == std::max(0, phi_km1 - phi_k + ell), "minimal_lift: unexpected count of ends at k-1");

    std::vector<Segment> v = rest;
    if (phi_km1 > phi_k) {
        for (int i = 0; i < r; ++i) v.push_back(i < ell ? extend_end(a0[i]) : a0[i]);
    } else if (phi_k - ell < phi_km1) {
        for (const auto& s : a0) v.push_back(extend_end(s));
        for (int i = r; i < ell; ++i) v.push_back(Segment::point(k));
    } else {
        v.insert(v.end(), a0.begin(), a0.end());
        for (int i = 0; i < ell; ++i) v.push_back(Segment::point(k));
    }
    Multisegment c(std::move(v));
    detail::ensure(leq_rank(c, a), "minimal_lift: result not below a");
    detail::ensure(hypothesis_Hk(c, a, k), "minimal_lift: result fails H_k");
    detail::ensure(truncate_end(c, k) == m, "minimal_lift: truncation is not the minimal element");
    return c;
}

inline Multisegment minimal_lift_begin(const Multisegment& a, int k) {
    return minimal_lift(a.reflected(), -k).reflected();
}

/// A sequence of truncation steps on one side.
struct DescentPath {
    Side side = Side::End;
    std::vector<int> steps;

    bool operator==(const DescentPath&) const = default;

    /// End side: k, k+1, ..., l. Begin side: l, l-1, ..., k.
    static DescentPath of_segment(const Segment& d, Side side) {
        DescentPath p{side, {}};
        if (side == Side::End)
            for (int k = d.begin; k <= d.end; ++k) p.steps.push_back(k);
        else
            for (int k = d.end; k >= d.begin; --k) p.steps.push_back(k);
        return p;
    }

    /// End side: ⪯-largest segment first. Begin side: the mirror (smallest begin first).
    static DescentPath of_multisegment(const Multisegment& d, Side side) {
        DescentPath p{side, {}};
        if (side == Side::End) {
            for (const auto& s : d) {
                auto q = of_segment(s, side);
                p.steps.insert(p.steps.end(), q.steps.begin(), q.steps.end());
            }
        } else {
            for (const auto& s : d.reflected()) {
                auto q = of_segment(reflect(s), side);
                p.steps.insert(p.steps.end(), q.steps.begin(), q.steps.end());
            }
        }
        return p;
    }
};

/// Paths applied one after another.
using CompositePath = std::vector<DescentPath>;

inline Multisegment truncate_path(const Multisegment& a, const DescentPath& p) {
    Multisegment cur = a;
    for (int k : p.steps) cur = truncate(cur, k, p.side);
    return cur;
}

inline Multisegment truncate_path(const Multisegment& a, const CompositePath& ps) {
    Multisegment cur = a;
    for (const auto& p : ps) cur = truncate_path(cur, p);
    return cur;
}

/// c ∈ S(a)_{k_1,...,k_r}, assuming c ∈ S(a).
inline bool in_descent_path(const Multisegment& c, const Multisegment& a, const CompositePath& ps) {
    Multisegment cc = c, aa = a;
    for (const auto& p : ps)
        for (int k : p.steps) {
            if (!hypothesis(cc, aa, k, p.side)) return false;
            cc = truncate(cc, k, p.side);
            aa = truncate(aa, k, p.side);
        }
    return true;
}

inline bool in_descent_path(const Multisegment& c, const Multisegment& a, const DescentPath& p) {
    return in_descent_path(c, a, CompositePath{p});
}

inline std::vector<Multisegment> descent_set_path(const Multisegment& a, const CompositePath& ps,
                                                  std::size_t cap = kDefaultPosetCap) {
    std::vector<Multisegment> out;
    for (const auto& c : generate_poset(a, cap).elements)
        if (in_descent_path(c, a, ps)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Multisegment> descent_set_path(const Multisegment& a, const DescentPath& p,
                                                  std::size_t cap = kDefaultPosetCap) {
    return descent_set_path(a, CompositePath{p}, cap);
}

inline Multisegment psi_path(const Multisegment& c, const CompositePath& ps) { return truncate_path(c, ps); }

/// Inverse of psi_path on the descent set, one step at a time from the far end.
inline Multisegment psi_path_inverse(const Multisegment& a, const CompositePath& ps, const Multisegment& d) {
    struct Step {
        Side side;
        int k;
    };
    std::vector<Step> steps;
    std::vector<Multisegment> chain{a};
    for (const auto& p : ps)
        for (int k : p.steps) {
            steps.push_back({p.side, k});
            chain.push_back(truncate(chain.back(), k, p.side));
        }
    Multisegment cur = d;
    for (std::size_t i = steps.size(); i-- > 0;) {
        const auto& st = steps[i];
        cur = st.side == Side::End ? psi_k_inverse(chain[i], st.k, cur) : psi_k_inverse_begin(chain[i], st.k, cur);
    }
    return cur;
}

inline Multisegment psi_path_inverse(const Multisegment& a, const DescentPath& p, const Multisegment& d) {
    return psi_path_inverse(a, CompositePath{p}, d);
}

}  // namespace mseg
