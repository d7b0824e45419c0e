#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "multiseg/error.hpp"

namespace mseg {

/// Element of S_n in one-line notation, values 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
        std::vector<int> seen(w_.size() + 1, 0);
        for (int x : w_) {
            if (x < 1 || x > static_cast<int>(w_.size()) || seen[x]++)
                throw DomainError("not a permutation: " + to_string());
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// "1324" (digits, n ≤ 9) or "1,3,2,4".
    static Permutation parse(const std::string& s) {
        std::vector<int> v;
        if (s.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos <= s.size()) {
                std::size_t next = s.find(',', pos);
                std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
                    throw ParseError("bad permutation token '" + tok + "'");
                v.push_back(std::stoi(tok));
                if (next == std::string::npos) break;
                pos = next + 1;
            }
        } else {
            for (char c : s) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation '" + s + "'");
                v.push_back(c - '0');
            }
        }
        try {
            return Permutation(std::move(v));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    auto operator<=>(const Permutation&) const = default;

    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::size_t j = i + 1; j < w_.size(); ++j) inv += w_[i] > w_[j] ? 1 : 0;
        return inv;
    }

    Permutation inverse() const {
        std::vector<int> v(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) v[w_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(v));
    }

    /// s_i w: swaps the values i and i+1.
    Permutation left_mult(int i) const {
        Permutation r = *this;
        for (int& x : r.w_) {
            if (x == i)
                x = i + 1;
            else if (x == i + 1)
                x = i;
        }
        return r;
    }

    /// w s_i: swaps positions i and i+1.
    Permutation right_mult(int i) const {
        Permutation r = *this;
        std::swap(r.w_[i - 1], r.w_[i]);
        return r;
    }

    /// s_i w < w iff i+1 appears to the left of i.
    bool is_left_descent(int i) const {
        auto pi = std::find(w_.begin(), w_.end(), i);
        auto pj = std::find(w_.begin(), w_.end(), i + 1);
        return pj < pi;
    }

    std::vector<int> left_descents() const {
        std::vector<int> d;
        for (int i = 1; i < size(); ++i)
            if (is_left_descent(i)) d.push_back(i);
        return d;
    }

    std::string to_string() const {
        bool small = w_.size() <= 9;
        std::string r;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (!small && i) r += ",";
            r += std::to_string(w_[i]);
        }
        return r;
    }

private:
    std::vector<int> w_;
};

/// Tableau criterion: v ≤ w iff #{a ≤ i : v(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j} for all i, j.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw DomainError("bruhat_leq: size mismatch");
    const int n = v.size();
    for (int j = 2; j <= n; ++j) {
        int cv = 0, cw = 0;
        for (int i = 1; i < n; ++i) {
            cv += v(i) >= j ? 1 : 0;
            cw += w(i) >= j ? 1 : 0;
            if (cv > cw) return false;
        }
    }
    return true;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Classical pattern containment, e.g. contains_pattern(w, "3412").
inline bool contains_pattern(const Permutation& w, const std::vector<int>& pattern) {
    const int n = w.size(), k = static_cast<int>(pattern.size());
    if (k > n) return false;
    std::vector<int> idx(k);
    std::function<bool(int, int)> rec = [&](int depth, int start) -> bool {
        if (depth == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if ((w(idx[a] + 1) < w(idx[b] + 1)) != (pattern[a] < pattern[b])) return false;
            return true;
        }
        for (int p = start; p < n; ++p) {
            idx[depth] = p;
            if (rec(depth + 1, p + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace mseg
