#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/kazhdan_lusztig.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/phi.hpp"
#include "multiseg/poset.hpp"
#include "multiseg/symmetrization.hpp"

namespace mseg {

/// m(b,a) for symmetric a, read straight off the KL polynomial: m(Φ(v),Φ(w)) = P_{w,v}(1).
inline std::int64_t mult_symmetric(const Multisegment& b, const Multisegment& a, KLEngine& engine) {
    if (!a.is_symmetric()) throw DomainError("mult_symmetric: not symmetric: " + a.to_string());
    if (!leq_rank(b, a)) return 0;
    const Multisegment base = identity_base(a);
    return evaluate_at_one(engine(phi_inverse(base, a), phi_inverse(base, b)));
}

inline std::int64_t mult_symmetric(const Multisegment& b, const Multisegment& a) {
    return mult_symmetric(b, a, default_kl_engine());
}

/// m(b,a), multiplicity of L_b in π(a).
inline std::int64_t mult(const Multisegment& b, const Multisegment& a) {
    if (!leq_rank(b, a)) return 0;
    if (b == a) return 1;
    const auto data = symmetrize(a);
    const Multisegment bs = lift_stepwise(data, b);
    const Multisegment base = identity_base(data.symmetric);
    auto w = phi_inverse(base, data.symmetric);
    auto v = phi_inverse(base, bs);
    return evaluate_at_one(kl_polynomial(w, v));
}

using MultVector = std::map<Multisegment, std::int64_t>;

/// m(b,a) for every b ∈ S(a), computed once per a.
inline std::shared_ptr<const MultVector> mult_matrix(const Multisegment& a, std::size_t cap = kDefaultPosetCap) {
    static std::mutex mu;
    static std::map<Multisegment, std::shared_ptr<const MultVector>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
    }
    const auto poset = generate_poset(a, cap);
    const auto data = symmetrize(a);
    const auto path = data.path();
    const Multisegment base = identity_base(data.symmetric);
    const auto w = phi_inverse(base, data.symmetric);
    auto out = std::make_shared<MultVector>();
    for (const auto& b : poset.elements) {
        auto v = phi_inverse(base, psi_path_inverse(data.symmetric, path, b));
        std::int64_t m = evaluate_at_one(kl_polynomial(w, v));
        detail::ensure(m >= 1, "mult_matrix: nonpositive multiplicity at " + b.to_string());
        out->emplace(b, m);
    }
    detail::ensure(out->at(a) == 1, "mult_matrix: m(a,a) != 1");
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(a, std::move(out)).first->second;
}

enum class RelationType { Covers, LinkedNotJuxtaposed, Juxtaposed, Unrelated };

inline const char* relation_name(RelationType t) {
    switch (t) {
        case RelationType::Covers: return "covers";
        case RelationType::LinkedNotJuxtaposed: return "linked-not-juxtaposed";
        case RelationType::Juxtaposed: return "juxtaposed";
        case RelationType::Unrelated: return "unrelated";
    }
    return "?";
}

inline RelationType relation_type(const Segment& d1, const Segment& d2) {
    if (d1.contains(d2)) return RelationType::Covers;
    bool union_is_segment = d1.begin <= d2.end + 1 && d2.begin <= d1.end + 1;
    if (!union_is_segment) return RelationType::Unrelated;
    return intersection(d1, d2) ? RelationType::LinkedNotJuxtaposed : RelationType::Juxtaposed;
}

/// ξ: a -> a' as aligned positions, plus the induced endpoint maps.
struct RelationTypeMap {
    Multisegment source;
    Multisegment target;
    std::vector<std::size_t> pairing;  // source[i] -> target[pairing[i]]
    std::map<int, int> begin_map;
    std::map<int, int> end_map;
};

namespace detail {

inline bool monotone_map(const std::vector<std::pair<int, int>>& pairs, std::map<int, int>& out) {
    for (auto [x, y] : pairs) {
        auto [it, fresh] = out.emplace(x, y);
        if (!fresh && it->second != y) return false;
    }
    int prev = 0;
    bool first = true;
    for (auto [x, y] : out) {
        if (!first && y <= prev) return false;
        prev = y;
        first = false;
    }
    return true;
}

}  // namespace detail

/// Both are stored ⪯-sorted, so the only order-preserving ξ is the positional one
/// (up to swapping equal segments, which changes nothing).
inline std::optional<RelationTypeMap> same_relation_type(const Multisegment& a, const Multisegment& a2) {
    if (a.size() != a2.size()) return std::nullopt;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if ((a[i] == a[j]) != (a2[i] == a2[j])) return std::nullopt;
            if (precedes(a[i], a[j]) != precedes(a2[i], a2[j])) return std::nullopt;
            if (i != j && relation_type(a[i], a[j]) != relation_type(a2[i], a2[j])) return std::nullopt;
        }
    RelationTypeMap m{a, a2, {}, {}, {}};
    std::vector<std::pair<int, int>> bp, ep;
    for (std::size_t i = 0; i < n; ++i) {
        m.pairing.push_back(i);
        bp.emplace_back(a[i].begin, a2[i].begin);
        ep.emplace_back(a[i].end, a2[i].end);
    }
    if (!detail::monotone_map(bp, m.begin_map) || !detail::monotone_map(ep, m.end_map)) return std::nullopt;
    return m;
}

/// Ξ(b) = {[b(ξ)(b(Δ)), e(ξ)(e(Δ))] : Δ ∈ b}.
inline Multisegment xi_transport(const RelationTypeMap& m, const Multisegment& b) {
    if (!leq_rank(b, m.source))
        throw DomainError("xi_transport: " + b.to_string() + " is not below " + m.source.to_string());
    std::vector<Segment> v;
    for (const auto& s : b) {
        // endpoints of b are endpoints of the source, so both lookups succeed
        int nb = m.begin_map.at(s.begin), ne = m.end_map.at(s.end);
        if (nb > ne) throw InvariantViolation("xi_transport: produced an empty segment");
        v.push_back({nb, ne});
    }
    return Multisegment(std::move(v));
}

}  // namespace mseg
