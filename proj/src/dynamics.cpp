#include "ziglab/dynamics.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "ziglab/rotnum.hpp"

namespace ziglab {

namespace {

constexpr long long kMaxEnumerationPeriod = 10;

long long elapsed_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

// f(g(i)) for i = 0..n-1.  Lift values stay within a few multiples of n, so
// plain machine arithmetic is exact here; only orbit drift below goes through
// arbitrary precision.
void compose_values(const MonotoneLift& f, const MonotoneLift& g,
                    std::vector<long long>& out) {
    long long n = f.n;
    out.resize(n);
    for (long long i = 0; i < n; ++i) {
        long long gi = g.values[i];
        long long k = gi >= 0 ? gi / n : -((-gi + n - 1) / n);
        out[i] = f.values[gi - k * n] + k * n;
    }
}

std::string lift_str(const MonotoneLift& f) {
    std::string s = "(";
    for (size_t i = 0; i < f.values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.values[i]);
    }
    return s + ")";
}

} // namespace

MonotoneLift::MonotoneLift(long long period, std::vector<long long> vals)
    : n(period), values(std::move(vals)) {
    if (n < 1) throw UsageError("lift period must be >= 1");
    if (static_cast<long long>(values.size()) != n)
        throw UsageError("lift needs exactly one value per residue");
    if (values[0] < 0 || values[0] >= n)
        throw UsageError("canonical lift needs values[0] in [0, n)");
    for (long long i = 1; i < n; ++i)
        if (values[i] < values[i - 1]) throw UsageError("lift values must be nondecreasing");
    if (values[n - 1] > values[0] + n)
        throw UsageError("degree-one lift needs values[n-1] <= values[0] + n");
}

Int MonotoneLift::sigma(const Int& i) const {
    Int k = floor_div(i, Int(n));
    long long r = static_cast<long long>(i - k * n);
    return Int(values[r]) + k * n;
}

Rational rotation_number_raw(long long n, std::span<const long long> values) {
    // Follow the orbit of 0; residues mod n repeat within n+1 steps, and the
    // cycle they close determines the limit exactly.
    std::vector<long long> step_at(n, -1);
    std::vector<Int> pos_at;
    Int pos = 0;
    for (long long t = 0;; ++t) {
        Int k = floor_div(pos, Int(n));
        long long r = static_cast<long long>(pos - k * n);
        if (step_at[r] >= 0) {
            long long t1 = step_at[r];
            Int drift = pos - pos_at[t1];
            return Rational(drift, Int(t - t1) * n);
        }
        step_at[r] = t;
        pos_at.push_back(pos);
        pos = Int(values[r]) + k * n;
    }
}

Rational rotation_number(const MonotoneLift& f, const Int& start) {
    if (start == 0) return rotation_number_raw(f.n, f.values);
    std::vector<long long> step_at(f.n, -1);
    std::vector<Int> pos_at;
    Int pos = start;
    for (long long t = 0;; ++t) {
        Int k = floor_div(pos, Int(f.n));
        long long r = static_cast<long long>(pos - k * f.n);
        if (step_at[r] >= 0) {
            long long t1 = step_at[r];
            return Rational(pos - pos_at[t1], Int(t - t1) * f.n);
        }
        step_at[r] = t;
        pos_at.push_back(pos);
        pos = Int(f.values[r]) + k * f.n;
    }
}

MonotoneLift compose(const MonotoneLift& f, const MonotoneLift& g) {
    if (f.n != g.n) throw UsageError("cannot compose lifts of different periods");
    std::vector<long long> w;
    compose_values(f, g, w);
    long long shift = w[0] >= 0 ? w[0] / f.n : -((-w[0] + f.n - 1) / f.n);
    for (long long& v : w) v -= shift * f.n;
    return MonotoneLift(f.n, std::move(w));
}

Rational composition_rotation(const MonotoneLift& f, const MonotoneLift& g) {
    if (f.n != g.n) throw UsageError("cannot compose lifts of different periods");
    std::vector<long long> w;
    compose_values(f, g, w);
    return rotation_number_raw(f.n, w);
}

std::vector<MonotoneLift> enumerate_lifts(long long n, const std::optional<Rational>& rot,
                                          bool allow_large) {
    if (n < 1) throw UsageError("lift period must be >= 1");
    if (n > kMaxEnumerationPeriod && !allow_large)
        throw UsageError("period " + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(kMaxEnumerationPeriod) + " (pass allow_large to override)");
    std::vector<MonotoneLift> out;
    std::vector<long long> v(n);
    // Odometer over nondecreasing vectors v0 <= ... <= v_{n-1} <= v0 + n,
    // v0 in [0, n); lexicographic by construction.
    for (long long v0 = 0; v0 < n; ++v0) {
        std::fill(v.begin(), v.end(), v0);
        while (true) {
            if (!rot || rotation_number_raw(n, v) == *rot) out.emplace_back(n, v);
            long long i = n - 1;
            while (i >= 1 && v[i] == v0 + n) --i;
            if (i == 0) break;
            ++v[i];
            for (long long j = i + 1; j < n; ++j) v[j] = v[i];
        }
    }
    return out;
}

MaxCompositionResult max_composition(const Rational& x, const Rational& y, long long n,
                                     bool allow_large) {
    if (x < 0 || x >= 1 || y < 0 || y >= 1)
        throw UsageError("rotation-number filters must lie in [0, 1)");
    std::vector<MonotoneLift> fs = enumerate_lifts(n, x, allow_large);
    std::vector<MonotoneLift> gs = enumerate_lifts(n, y, allow_large);
    if (fs.empty() || gs.empty())
        throw DomainError("no period-" + std::to_string(n) + " lift has rotation number " +
                          (fs.empty() ? x : y).str());
    Rational bound = rot_max(x, y);
    const MonotoneLift* bf = nullptr;
    const MonotoneLift* bg = nullptr;
    Rational best;
    std::vector<long long> w;
    for (const MonotoneLift& f : fs) {
        for (const MonotoneLift& g : gs) {
            compose_values(f, g, w);
            Rational r = rotation_number_raw(n, w);
            if (r > bound)
                throw InvariantError("composition rotation " + r.str() + " exceeds bound " +
                                     bound.str());
            if (!bf || r > best) {
                best = r;
                bf = &f;
                bg = &g;
            }
        }
    }
    return {best, *bf, *bg};
}

Report verify_oracle_bound(long long max_n, bool allow_large) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "oracle-bound";
    unsigned long long lifts_total = 0;
    for (long long n = 1; n <= max_n; ++n) {
        std::vector<MonotoneLift> lifts = enumerate_lifts(n, std::nullopt, allow_large);
        lifts_total += lifts.size();
        std::vector<Rational> rots;
        rots.reserve(lifts.size());
        for (const MonotoneLift& f : lifts) rots.push_back(rotation_number(f));

        // rot values repeat heavily across lifts; cache the formula per pair.
        std::map<std::pair<Rational, Rational>, std::pair<Rational, Rational>> bounds;
        std::vector<long long> w;
        for (size_t i = 0; i < lifts.size(); ++i) {
            for (size_t j = 0; j < lifts.size(); ++j) {
                ++rep.checked;
                auto key = std::make_pair(rots[i], rots[j]);
                auto it = bounds.find(key);
                if (it == bounds.end())
                    it = bounds.emplace(key, std::make_pair(rot_min(rots[i], rots[j]),
                                                            rot_max(rots[i], rots[j])))
                             .first;
                compose_values(lifts[i], lifts[j], w);
                Rational r = rotation_number_raw(n, w);
                if (r > it->second.second)
                    rep.failures.push_back("n=" + std::to_string(n) + " f=" + lift_str(lifts[i]) +
                                           " g=" + lift_str(lifts[j]) + ": rot " + r.str() +
                                           " above rot_max " + it->second.second.str());
                else if (r < it->second.first)
                    rep.failures.push_back("n=" + std::to_string(n) + " f=" + lift_str(lifts[i]) +
                                           " g=" + lift_str(lifts[j]) + ": rot " + r.str() +
                                           " below rot_min " + it->second.first.str());
            }
        }
    }
    rep.add_extra("max_n", std::to_string(max_n));
    rep.add_extra("lifts", std::to_string(lifts_total));
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

} // namespace ziglab
