#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/permutation.hpp"

namespace mseg {

/// a_Id for the begin/end sets of a: i-th smallest begin paired with i-th smallest end.
inline Multisegment identity_base(const Multisegment& a) {
    auto b = a.begins(), e = a.ends();
    std::vector<Segment> v;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > e[i]) throw DomainError("identity_base: begin exceeds end in " + a.to_string());
        v.push_back({b[i], e[i]});
    }
    return Multisegment(std::move(v));
}

namespace detail {

inline void require_identity_base(const Multisegment& base) {
    if (!base.is_symmetric() || identity_base(base) != base)
        throw DomainError("not a symmetric base with increasing begins and ends: " + base.to_string());
}

}  // namespace detail

/// Φ(w) = Σ_i [b(Δ_i), e(Δ_{w(i)})].
inline Multisegment phi(const Multisegment& base, const Permutation& w) {
    detail::require_identity_base(base);
    if (w.size() != static_cast<int>(base.size())) throw DomainError("phi: permutation size mismatch");
    auto b = base.begins(), e = base.ends();
    std::vector<Segment> v;
    for (int i = 1; i <= w.size(); ++i) v.push_back({b[i - 1], e[w(i) - 1]});
    return Multisegment(std::move(v));
}

/// The w with phi(base, w) = b.
inline Permutation phi_inverse(const Multisegment& base, const Multisegment& b) {
    detail::require_identity_base(base);
    if (b.begins() != base.begins() || b.ends() != base.ends())
        throw DomainError("phi_inverse: " + b.to_string() + " does not share begins and ends with " +
                          base.to_string());
    auto bs = base.begins(), es = base.ends();
    std::vector<int> w(bs.size());
    for (const auto& s : b) {
        auto i = std::lower_bound(bs.begin(), bs.end(), s.begin) - bs.begin();
        auto j = std::lower_bound(es.begin(), es.end(), s.end) - es.begin();
        w[i] = static_cast<int>(j) + 1;
    }
    return Permutation(std::move(w));
}

}  // namespace mseg
