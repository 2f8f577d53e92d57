#pragma once

// Period sequences: p_k = constant term of f^k for k = 0..K, computed by two
// independent strategies whose agreement is asserted:
//   (A) full expansion — materialize f^j untruncated for j <= ceil(K/2) and
//       read each p_k off an exact zero-coefficient convolution of two
//       balanced powers (nothing is ever discarded);
//   (B) incremental convolution — walk f^j upward one factor at a time,
//       discarding only terms whose exponents provably cannot return to the
//       origin within the remaining multiplications (exponent-window
//       truncation), reading each constant term before pruning.
// Plus the closed-form series oracle for Fano specs.

#include "wci/laurent.hpp"
#include "wci/numeric.hpp"
#include "wci/weight_system.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace wci {

using periods = std::vector<bigint>;

struct period_options {
    long long term_budget = 10000000;  // max terms of any materialized power
};

namespace detail {

// exponent vectors packed into one uint64 via power-of-two fields with a
// guard bit, so that key(u+v) = key(u) + key(v) - key(0) without carries
struct exp_packer {
    int nv = 0;
    std::vector<long long> reach_lo, reach_hi;
    std::vector<int> shift;
    std::vector<std::uint64_t> mask;
    std::uint64_t key0 = 0;

    static exp_packer make(const std::vector<long long>& lo,
                           const std::vector<long long>& hi, int K)
    {
        exp_packer p;
        p.nv = static_cast<int>(lo.size());
        int at = 0;
        for (int i = 0; i < p.nv; ++i) {
            long long rl = K * std::min<long long>(lo[i], 0);
            long long rh = K * std::max<long long>(hi[i], 0);
            p.reach_lo.push_back(rl);
            p.reach_hi.push_back(rh);
            std::uint64_t range = static_cast<std::uint64_t>(rh - rl);
            int bits = std::bit_width(range) + 1;  // guard bit for one addition
            p.shift.push_back(at);
            p.mask.push_back((std::uint64_t(1) << bits) - 1);
            at += bits;
            if (at > 63)
                throw resource_error("period computation: exponent ranges too wide to pack");
        }
        for (int i = 0; i < p.nv; ++i)
            p.key0 |= static_cast<std::uint64_t>(-p.reach_lo[i]) << p.shift[i];
        return p;
    }

    std::uint64_t key(const std::vector<int>& e) const
    {
        std::uint64_t k = 0;
        for (int i = 0; i < nv; ++i)
            k |= static_cast<std::uint64_t>(e[i] - reach_lo[i]) << shift[i];
        return k;
    }

    long long field(std::uint64_t key, int i) const
    {
        return static_cast<long long>((key >> shift[i]) & mask[i]) + reach_lo[i];
    }

    // key of the negated exponent vector, if it is within reach
    bool negate(std::uint64_t key, std::uint64_t& out) const
    {
        out = 0;
        for (int i = 0; i < nv; ++i) {
            long long e = -field(key, i);
            if (e < reach_lo[i] || e > reach_hi[i])
                return false;
            out |= static_cast<std::uint64_t>(e - reach_lo[i]) << shift[i];
        }
        return true;
    }
};

struct packed_poly {
    std::vector<std::uint64_t> keys;  // sorted
    std::vector<bigint> coeffs;

    std::size_t size() const { return keys.size(); }

    const bigint* find(std::uint64_t key) const
    {
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key)
            return nullptr;
        return &coeffs[it - keys.begin()];
    }
};

inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// build-only open-addressing accumulator
class key_accumulator {
public:
    explicit key_accumulator(std::size_t expect)
    {
        std::size_t cap = 64;
        while (cap < expect * 2)
            cap <<= 1;
        keys_.assign(cap, kEmpty);
        vals_.resize(cap);
    }

    bigint& slot(std::uint64_t key)
    {
        if (count_ * 10 >= keys_.size() * 7)
            grow();
        std::size_t i = mix64(key) & (keys_.size() - 1);
        while (true) {
            if (keys_[i] == kEmpty) {
                keys_[i] = key;
                ++count_;
                return vals_[i];
            }
            if (keys_[i] == key)
                return vals_[i];
            i = (i + 1) & (keys_.size() - 1);
        }
    }

    std::size_t count() const { return count_; }

    packed_poly finish() &&
    {
        std::vector<std::size_t> order;
        order.reserve(count_);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty && vals_[i] != 0)
                order.push_back(i);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
        packed_poly out;
        out.keys.reserve(order.size());
        out.coeffs.reserve(order.size());
        for (std::size_t i : order) {
            out.keys.push_back(keys_[i]);
            out.coeffs.push_back(std::move(vals_[i]));
        }
        return out;
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
    std::vector<std::uint64_t> keys_;
    std::vector<bigint> vals_;
    std::size_t count_ = 0;

    void grow()
    {
        std::vector<std::uint64_t> ok = std::move(keys_);
        std::vector<bigint> ov = std::move(vals_);
        keys_.assign(ok.size() * 2, kEmpty);
        vals_.assign(ok.size() * 2, bigint());
        count_ = 0;
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (ok[i] != kEmpty) {
                std::size_t j = mix64(ok[i]) & (keys_.size() - 1);
                while (keys_[j] != kEmpty)
                    j = (j + 1) & (keys_.size() - 1);
                keys_[j] = ok[i];
                vals_[j] = std::move(ov[i]);
                ++count_;
            }
    }
};

// the union over m = 1..remaining of the boxes [-m*hi_i, -m*lo_i]
struct origin_window {
    const std::vector<long long>* lo;
    const std::vector<long long>* hi;
    int remaining;
    bool nested;  // all lo <= 0 <= hi: boxes nest, test only the largest

    bool admits(const exp_packer& pk, std::uint64_t key) const
    {
        if (remaining <= 0)
            return false;
        if (nested)
            return in_box(pk, key, remaining);
        for (int m = remaining; m >= 1; --m)
            if (in_box(pk, key, m))
                return true;
        return false;
    }

    bool in_box(const exp_packer& pk, std::uint64_t key, int m) const
    {
        for (int i = 0; i < pk.nv; ++i) {
            long long e = pk.field(key, i);
            if (e < -static_cast<long long>(m) * (*hi)[i] ||
                e > -static_cast<long long>(m) * (*lo)[i])
                return false;
        }
        return true;
    }
};

inline packed_poly pack(const laurent_poly& f, const exp_packer& pk)
{
    std::vector<std::pair<std::uint64_t, const bigint*>> items;
    items.reserve(f.terms.size());
    for (const auto& [e, c] : f.terms)
        items.emplace_back(pk.key(e), &c);
    std::sort(items.begin(), items.end());
    packed_poly out;
    for (auto& [k, c] : items) {
        out.keys.push_back(k);
        out.coeffs.push_back(*c);
    }
    return out;
}

// full product (window == nullptr) or product restricted to a target window
inline packed_poly mul_packed(const packed_poly& a, const packed_poly& b,
                              const exp_packer& pk, const origin_window* window,
                              long long term_budget)
{
    key_accumulator acc(std::max<std::size_t>(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t ka = a.keys[i] - pk.key0;  // pre-subtract the bias
        const bigint& ca = a.coeffs[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t k = ka + b.keys[j];
            if (window && !window->admits(pk, k))
                continue;
            acc.slot(k) += ca * b.coeffs[j];
        }
        if (static_cast<long long>(acc.count()) > term_budget)
            throw resource_error("period computation exceeded the term budget: " +
                                 std::to_string(acc.count()) + " terms");
    }
    return std::move(acc).finish();
}

// sum over term pairs whose exponents cancel
inline bigint dot_zero(const packed_poly& a, const packed_poly& b, const exp_packer& pk)
{
    const packed_poly& small = a.size() <= b.size() ? a : b;
    const packed_poly& large = a.size() <= b.size() ? b : a;
    bigint total = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        std::uint64_t nk;
        if (!pk.negate(small.keys[i], nk))
            continue;
        if (const bigint* c = large.find(nk))
            total += small.coeffs[i] * (*c);
    }
    return total;
}

inline void exponent_ranges(const laurent_poly& f, std::vector<long long>& lo,
                            std::vector<long long>& hi)
{
    std::size_t nv = f.vars.size();
    lo.assign(nv, 0);
    hi.assign(nv, 0);
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        for (std::size_t i = 0; i < nv; ++i) {
            if (first) {
                lo[i] = hi[i] = e[i];
            } else {
                lo[i] = std::min<long long>(lo[i], e[i]);
                hi[i] = std::max<long long>(hi[i], e[i]);
            }
        }
        first = false;
    }
}

// strategy A: balanced full expansion
inline periods periods_full(const laurent_poly& f, int K, const exp_packer& pk,
                            long long term_budget)
{
    periods p(K + 1);
    p[0] = 1;
    if (K == 0)
        return p;
    if (f.terms.empty())
        return p;
    int half = (K + 1) / 2;
    std::vector<packed_poly> pow(half + 1);
    pow[1] = pack(f, pk);
    for (int j = 2; j <= half; ++j)
        pow[j] = mul_packed(pow[j - 1], pow[1], pk, nullptr, term_budget);
    for (int k = 1; k <= K; ++k) {
        if (k <= half) {
            const bigint* c = pow[k].find(pk.key0);
            p[k] = c ? *c : bigint(0);
        } else {
            int a = (k + 1) / 2, b = k - a;
            p[k] = dot_zero(pow[a], pow[b], pk);
        }
    }
    return p;
}

// strategy B: incremental convolution with exponent-window truncation
inline periods periods_windowed(const laurent_poly& f, int K, const exp_packer& pk,
                                const std::vector<long long>& lo,
                                const std::vector<long long>& hi,
                                long long term_budget)
{
    periods p(K + 1);
    p[0] = 1;
    if (K == 0)
        return p;
    p[1] = constant_term(f);
    if (K == 1 || f.terms.empty())
        return p;

    bool nested = true;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > 0 || hi[i] < 0)
            nested = false;

    packed_poly base = pack(f, pk);
    // f itself, pruned for the K-1 remaining multiplications
    packed_poly h;
    {
        origin_window w{&lo, &hi, K - 1, nested};
        for (std::size_t i = 0; i < base.size(); ++i)
            if (w.admits(pk, base.keys[i])) {
                h.keys.push_back(base.keys[i]);
                h.coeffs.push_back(base.coeffs[i]);
            }
    }
    for (int j = 2; j <= K; ++j) {
        p[j] = dot_zero(h, base, pk);
        if (j < K) {
            origin_window w{&lo, &hi, K - j, nested};
            h = mul_packed(h, base, pk, &w, term_budget);
        }
    }
    return p;
}

}  // namespace detail

// Runs both strategies and asserts exact agreement.
inline periods period_sequence(const laurent_poly& f, int K, period_options opt = {})
{
    if (K < 0)
        throw precondition_error("K must be nonnegative");
    std::vector<long long> lo, hi;
    detail::exponent_ranges(f, lo, hi);
    detail::exp_packer pk = detail::exp_packer::make(lo, hi, std::max(K, 1));
    periods a = detail::periods_full(f, K, pk, opt.term_budget);
    periods b = detail::periods_windowed(f, K, pk, lo, hi, opt.term_budget);
    for (int k = 0; k <= K; ++k)
        if (a[k] != b[k])
            throw internal_error("period strategies disagree at k = " + std::to_string(k) +
                                 ": " + a[k].str() + " vs " + b[k].str());
    return a;
}

// Closed-form series for a Fano spec: a_k = 0 unless I | k, and
// a_{mI} = (mI)! * prod_j (d_j m)! / prod_i (a_i m)! in exact arithmetic.
inline periods iseries_oracle(const ci_spec& s, int K)
{
    if (K < 0)
        throw precondition_error("K must be nonnegative");
    long long index = fano_index(s);
    if (index <= 0)
        throw precondition_error("the series oracle needs a Fano spec (positive index)");
    periods out(K + 1, bigint(0));
    out[0] = 1;
    for (long long k = index; k <= K; k += index) {
        long long m = k / index;
        bigint num = factorial(k);
        for (long long d : s.degrees)
            num *= factorial(d * m);
        bigint den = 1;
        for (long long a : s.weights.w)
            den *= factorial(a * m);
        if (num % den != 0)
            throw precondition_error("the closed form is not an integer series for " +
                                     render_spec(s));
        out[k] = num / den;
    }
    return out;
}

}  // namespace wci
