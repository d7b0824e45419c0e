#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/io.hpp"
#include "multiseg/multiplicity.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/poset.hpp"
#include "multiseg/truncation.hpp"

namespace mseg {

enum class Basis { Pi, L };

/// Finite Z-combination of basis elements π(a) or L_a. π(∅) = L_∅ = 1.
class RingElement {
public:
    using Terms = std::map<Multisegment, std::int64_t>;

    explicit RingElement(Basis basis = Basis::Pi) : basis_(basis) {}

    static RingElement pi(const Multisegment& a, std::int64_t c = 1) { return single(Basis::Pi, a, c); }
    static RingElement L(const Multisegment& a, std::int64_t c = 1) { return single(Basis::L, a, c); }
    static RingElement one(Basis basis = Basis::Pi) { return single(basis, Multisegment{}, 1); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coeff(const Multisegment& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Multisegment& a, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(a, c);
        if (!fresh && (it->second += c) == 0) terms_.erase(it);
    }

    RingElement& operator+=(const RingElement& o) {
        same_basis(o);
        for (const auto& [a, c] : o.terms_) add(a, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        same_basis(o);
        for (const auto& [a, c] : o.terms_) add(a, -c);
        return *this;
    }
    RingElement operator+(const RingElement& o) const { return RingElement(*this) += o; }
    RingElement operator-(const RingElement& o) const { return RingElement(*this) -= o; }
    RingElement operator*(std::int64_t k) const {
        RingElement r(basis_);
        for (const auto& [a, c] : terms_) r.add(a, c * k);
        return r;
    }

    bool operator==(const RingElement& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string r;
        const char* tag = basis_ == Basis::Pi ? "pi" : "L";
        for (const auto& [a, c] : terms_) {
            if (!r.empty()) r += " + ";
            r += std::to_string(c) + "*" + tag + a.to_string();
        }
        return r;
    }

private:
    static RingElement single(Basis b, const Multisegment& a, std::int64_t c) {
        RingElement r(b);
        r.add(a, c);
        return r;
    }
    void same_basis(const RingElement& o) const {
        if (o.basis_ != basis_) throw DomainError("ring: mixing pi and L bases");
    }

    Basis basis_;
    Terms terms_;
};

inline RingElement product(const RingElement& x, const RingElement& y) {
    if (x.basis() != Basis::Pi || y.basis() != Basis::Pi) throw DomainError("product: operands must be in the pi basis");
    RingElement r(Basis::Pi);
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) r.add(a + b, ca * cb);
    return r;
}

namespace detail {

/// Product over segments of (Δ + [touched]·shrunk(Δ)), expanded.
inline void derive_term(RingElement& out, const Multisegment& a, std::int64_t coeff, int i, Side side) {
    std::vector<Segment> fixed, touched;
    for (const auto& s : a) ((side == Side::End ? s.end : s.begin) == i ? touched : fixed).push_back(s);
    const std::size_t t = touched.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
        std::vector<Segment> v = fixed;
        for (std::size_t j = 0; j < t; ++j) {
            if (!(mask >> j & 1)) {
                v.push_back(touched[j]);
                continue;
            }
            auto s = side == Side::End ? drop_end(touched[j]) : drop_begin(touched[j]);
            if (s) v.push_back(*s);
        }
        out.add(Multisegment(std::move(v)), coeff);
    }
}

}  // namespace detail

/// 𝒟^i (side End) or ⁱ𝒟 (side Begin).
inline RingElement derivative(const RingElement& x, int i, Side side) {
    if (x.basis() != Basis::Pi) throw DomainError("derivative: operand must be in the pi basis");
    RingElement r(Basis::Pi);
    for (const auto& [a, c] : x.terms()) detail::derive_term(r, a, c, i, side);
    return r;
}

inline RingElement derivative_end(const RingElement& x, int i) { return derivative(x, i, Side::End); }
inline RingElement derivative_begin(const RingElement& x, int i) { return derivative(x, i, Side::Begin); }

/// 𝒟^{[i,j]} applies i first; ^{[i,j]}𝒟 applies j first.
inline RingElement derivative_segment(const RingElement& x, const Segment& d, Side side) {
    RingElement r = x;
    if (side == Side::End)
        for (int k = d.begin; k <= d.end; ++k) r = derivative(r, k, side);
    else
        for (int k = d.end; k >= d.begin; --k) r = derivative(r, k, side);
    return r;
}

/// 𝒟^c applies the ⪯-largest segment first; ^c𝒟 applies the ⪯-smallest first.
inline RingElement derivative_composite(const RingElement& x, const Multisegment& c, Side side) {
    RingElement r = x;
    const auto& segs = c.segments();  // ⪯-largest first
    if (side == Side::End)
        for (const auto& d : segs) r = derivative_segment(r, d, side);
    else
        for (auto it = segs.rbegin(); it != segs.rend(); ++it) r = derivative_segment(r, *it, side);
    return r;
}

/// π(a) = Σ_b m(b,a) L_b, extended linearly.
inline RingElement to_L_basis(const RingElement& x) {
    if (x.basis() == Basis::L) return x;
    RingElement r(Basis::L);
    for (const auto& [a, c] : x.terms())
        for (const auto& [b, m] : *mult_matrix(a)) r.add(b, c * m);
    return r;
}

/// Inverse of to_L_basis by peeling off a maximal term at a time.
inline RingElement to_pi_basis(const RingElement& x) {
    if (x.basis() == Basis::Pi) return x;
    RingElement residual = x, out(Basis::Pi);
    while (!residual.is_zero()) {
        const Multisegment* top = nullptr;
        for (const auto& [a, c] : residual.terms()) {
            bool maximal = true;
            for (const auto& [b, c2] : residual.terms())
                if (!(a == b) && leq_rank(a, b)) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                top = &a;
                break;
            }
        }
        detail::ensure(top != nullptr, "to_pi_basis: no maximal term");
        const Multisegment a = *top;
        const std::int64_t c = residual.coeff(a);
        out.add(a, c);
        residual -= to_L_basis(RingElement::pi(a, c));
    }
    return out;
}

/// π(a^(k)) = Σ_{c ∈ S(a)_k} m(c,a) L_{c^(k)}, both sides in the L basis.
inline bool check_eq2(const Multisegment& a, int k) {
    const RingElement lhs = to_L_basis(RingElement::pi(truncate_end(a, k)));
    const auto mm = mult_matrix(a);
    RingElement rhs(Basis::L);
    for (const auto& c : descent_set(a, k)) rhs.add(truncate_end(c, k), mm->at(c));
    return lhs == rhs;
}

/// 𝒟^i(L_a) (or ⁱ𝒟) in the L basis; coefficients must be nonnegative.
inline RingElement derivative_L(const Multisegment& a, int i, Side side) {
    RingElement r = to_L_basis(derivative(to_pi_basis(RingElement::L(a)), i, side));
    for (const auto& [b, c] : r.terms())
        detail::ensure(c > 0, "derivative_L: coefficient " + std::to_string(c) + " at " + b.to_string());
    return r;
}

inline json to_json(const RingElement& x) {
    json terms = json::array();
    for (const auto& [a, c] : x.terms()) terms.push_back({{"coeff", c}, {"multisegment", to_json(a)}});
    return {{"basis", x.basis() == Basis::Pi ? "pi" : "L"}, {"terms", terms}};
}

inline RingElement ring_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("ring expression needs \"basis\" and \"terms\"");
    const auto& b = j["basis"];
    if (!b.is_string() || (b != "pi" && b != "L")) throw ParseError("basis must be \"pi\" or \"L\"");
    RingElement r(b == "pi" ? Basis::Pi : Basis::L);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_number_integer() || !t.contains("multisegment"))
            throw ParseError("bad term: " + t.dump());
        r.add(multisegment_from_json(t["multisegment"]), t["coeff"].get<std::int64_t>());
    }
    return r;
}

}  // namespace mseg
