#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/permutation.hpp"

namespace mseg {

/// Coefficients by power of q; empty means the zero polynomial. No trailing zeros.
using KLPolynomial = std::vector<std::int64_t>;

inline std::int64_t evaluate_at_one(const KLPolynomial& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
}

inline std::string poly_to_string(const KLPolynomial& p) {
    if (p.empty()) return "0";
    std::string r;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!r.empty()) r += " + ";
        if (i == 0 || p[i] != 1) r += std::to_string(p[i]);
        if (i >= 1) r += "q";
        if (i >= 2) r += "^" + std::to_string(i);
    }
    return r;
}

/// Which left descent drives the recursion. Results must not depend on it.
enum class DescentChoice { FirstLeft, LastLeft };

/// Memoized P_{x,w} for symmetric groups, one whole column P_{·,w} at a time.
class KLEngine {
public:
    using Column = std::map<Permutation, KLPolynomial>;  // only x ≤ w stored

    explicit KLEngine(DescentChoice choice = DescentChoice::FirstLeft) : choice_(choice) {}

    KLPolynomial operator()(const Permutation& x, const Permutation& w) {
        if (x.size() != w.size()) throw DomainError("kl_polynomial: size mismatch");
        const auto& col = column(w);
        auto it = col->find(x);
        return it == col->end() ? KLPolynomial{} : it->second;
    }

    /// μ(x,w): coefficient of q^{(ℓ(w)-ℓ(x)-1)/2}, zero for even length difference.
    std::int64_t mu(const Permutation& x, const Permutation& w) {
        int d = w.length() - x.length();
        if (d <= 0 || d % 2 == 0) return 0;
        auto p = (*this)(x, w);
        std::size_t deg = static_cast<std::size_t>((d - 1) / 2);
        return deg < p.size() ? p[deg] : 0;
    }

    std::shared_ptr<const Column> column(const Permutation& w) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(w);
            if (it != cache_.end()) return it->second;
        }
        auto col = std::make_shared<const Column>(compute(w));
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(w, col).first->second;
    }

private:
    static void add_shifted(KLPolynomial& acc, const KLPolynomial& p, std::size_t shift, std::int64_t coeff) {
        if (p.empty() || coeff == 0) return;
        if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
        for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += coeff * p[i];
    }

    static void trim(KLPolynomial& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    Column compute(const Permutation& w) {
        const int n = w.size();
        if (w == Permutation::identity(n)) return Column{{w, KLPolynomial{1}}};
        auto desc = w.left_descents();
        const int s = choice_ == DescentChoice::FirstLeft ? desc.front() : desc.back();
        const Permutation v = w.left_mult(s);
        const auto colv = column(v);
        const int lw = w.length();

        // z < v with sz < z and μ(z,v) ≠ 0
        std::vector<std::pair<Permutation, std::int64_t>> corrections;
        const int lv = v.length();
        for (const auto& [z, pz] : *colv) {
            int d = lv - z.length();
            if (d <= 0 || d % 2 == 0 || !z.is_left_descent(s)) continue;
            std::size_t deg = static_cast<std::size_t>((d - 1) / 2);
            if (deg < pz.size() && pz[deg] != 0) corrections.emplace_back(z, pz[deg]);
        }

        // [e,w] = [e,v] ∪ s[e,v]
        std::set<Permutation> below;
        for (const auto& kv : *colv) {
            below.insert(kv.first);
            below.insert(kv.first.left_mult(s));
        }

        auto lookup = [](const Column& c, const Permutation& x) -> const KLPolynomial* {
            auto it = c.find(x);
            return it == c.end() ? nullptr : &it->second;
        };

        Column out;
        for (const auto& x : below) {
            const bool c = x.is_left_descent(s);
            KLPolynomial p;
            if (auto q = lookup(*colv, x.left_mult(s))) add_shifted(p, *q, c ? 0 : 1, 1);
            if (auto q = lookup(*colv, x)) add_shifted(p, *q, c ? 1 : 0, 1);
            for (const auto& [z, m] : corrections) {
                auto colz = column(z);
                if (auto q = lookup(*colz, x))
                    add_shifted(p, *q, static_cast<std::size_t>((lw - z.length()) / 2), -m);
            }
            trim(p);
            check(x, w, p);
            if (!p.empty()) out.emplace(x, std::move(p));
        }
        return out;
    }

    static void check(const Permutation& x, const Permutation& w, const KLPolynomial& p) {
        const std::string tag = "P_{" + x.to_string() + "," + w.to_string() + "}";
        detail::ensure(!p.empty() && p[0] == 1, tag + " should have constant term 1");
        for (auto c : p) detail::ensure(c >= 0, tag + " has a negative coefficient");
        if (x != w) {
            int bound = (w.length() - x.length() - 1) / 2;
            detail::ensure(static_cast<int>(p.size()) - 1 <= bound, tag + " violates the degree bound");
        }
    }

    DescentChoice choice_;
    std::mutex mu_;
    std::map<Permutation, std::shared_ptr<const Column>> cache_;
};

inline KLEngine& default_kl_engine() {
    static KLEngine engine(DescentChoice::FirstLeft);
    return engine;
}

inline KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
    return default_kl_engine()(x, w);
}

}  // namespace mseg
