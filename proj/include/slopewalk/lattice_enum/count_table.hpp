#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "slopewalk/errors.hpp"
#include "slopewalk/exactmath/rational.hpp"
#include "slopewalk/lattice_enum/slope.hpp"

namespace slopewalk {

struct DirectedQuery {
    JumpPolynomial jumps;
    std::int64_t length = 0;
    std::int64_t start = 0;
    std::optional<std::int64_t> end;  // nullopt: ending anywhere
    bool constrained = true;           // all altitudes >= 0
    bool track_area = false;
    bool keep_history = true;          // false keeps only the final row
};

/**
 * Step-by-step transfer table for directed paths:
 * counts[k+1][h] = sum_j w_j counts[k][h-j], optionally restricted to h >= 0.
 *
 * Each row stores a dense altitude window [low, low + size). Altitudes that
 * can neither be reached from the start nor return to a fixed end in the
 * remaining steps are never stored. Area sums are kept doubled (sum over
 * paths of sum over steps of h_before + h_after) so they stay integral.
 */
template <class Value>
class BasicCountTable {
public:
    struct Row {
        std::int64_t low = 0;
        std::vector<Value> counts;
        std::vector<Value> doubled_area;
    };

    explicit BasicCountTable(const DirectedQuery& q) : query_(q) { build(); }

    std::int64_t length() const { return query_.length; }
    const DirectedQuery& query() const { return query_; }

    Value count(std::int64_t step, std::int64_t altitude) const
    {
        const Row& r = row(step);
        const std::int64_t i = altitude - r.low;
        if (i < 0 || i >= static_cast<std::int64_t>(r.counts.size())) return Value(0);
        return r.counts[static_cast<std::size_t>(i)];
    }

    // Sum over paths of the trapezoid area accumulated up to `step`.
    BigRational area_sum(std::int64_t step, std::int64_t altitude) const
    {
        detail::require(query_.track_area, "area was not tracked for this table");
        const Row& r = row(step);
        const std::int64_t i = altitude - r.low;
        if (i < 0 || i >= static_cast<std::int64_t>(r.doubled_area.size())) return 0;
        return BigRational(r.doubled_area[static_cast<std::size_t>(i)]) / 2;
    }

    // Total over the final row, restricted to the requested end if any.
    Value final_count() const
    {
        if (query_.end) return count(query_.length, *query_.end);
        Value total(0);
        for (const auto& v : rows_.back().counts) total += v;
        return total;
    }

    BigRational final_area_sum() const
    {
        if (query_.end) return area_sum(query_.length, *query_.end);
        detail::require(query_.track_area, "area was not tracked for this table");
        Value total(0);
        for (const auto& v : rows_.back().doubled_area) total += v;
        return BigRational(total) / 2;
    }

    const Row& row(std::int64_t step) const
    {
        detail::require(step >= 0 && step <= query_.length, "step outside the table");
        if (!query_.keep_history) {
            detail::require(step == query_.length, "only the final row was kept");
            return rows_.back();
        }
        return rows_[static_cast<std::size_t>(step)];
    }

private:
    static Value weight_value(const BigRational& w)
    {
        if constexpr (std::is_same_v<Value, BigRational>) {
            return w;
        } else {
            return to_integer(w, "jump weight");
        }
    }

    // Altitude window at step k; empty when hi < lo.
    std::pair<std::int64_t, std::int64_t> window(std::int64_t k) const
    {
        const std::int64_t up = std::max<std::int64_t>(query_.jumps.max_jump(), 0);
        const std::int64_t down = std::max<std::int64_t>(-query_.jumps.min_jump(), 0);
        const std::int64_t n = query_.length;
        std::int64_t lo = query_.start - down * k;
        std::int64_t hi = query_.start + up * k;
        if (query_.end) {
            lo = std::max(lo, *query_.end - up * (n - k));
            hi = std::min(hi, *query_.end + down * (n - k));
        }
        if (query_.constrained) lo = std::max<std::int64_t>(lo, 0);
        return {lo, hi};
    }

    void build()
    {
        detail::require(query_.length >= 0, "path length must be non-negative");
        if (query_.constrained) detail::require(query_.start >= 0, "constrained paths start at altitude >= 0");

        std::vector<std::pair<std::int64_t, Value>> jumps;
        for (const auto& [j, w] : query_.jumps.weights()) jumps.emplace_back(j, weight_value(w));

        Row current;
        {
            auto [lo, hi] = window(0);
            current.low = lo;
            if (hi >= lo) {
                current.counts.assign(static_cast<std::size_t>(hi - lo + 1), Value(0));
                if (query_.track_area) current.doubled_area.assign(current.counts.size(), Value(0));
                if (query_.start >= lo && query_.start <= hi)
                    current.counts[static_cast<std::size_t>(query_.start - lo)] = 1;
            }
        }
        if (query_.keep_history) rows_.push_back(current);

        Value scratch;
        for (std::int64_t k = 0; k < query_.length; ++k) {
            auto [lo, hi] = window(k + 1);
            Row next;
            next.low = lo;
            if (hi >= lo) {
                next.counts.assign(static_cast<std::size_t>(hi - lo + 1), Value(0));
                if (query_.track_area) next.doubled_area.assign(next.counts.size(), Value(0));
            }
            for (std::size_t i = 0; i < current.counts.size(); ++i) {
                const Value& c = current.counts[i];
                if (c == 0) continue;
                const std::int64_t h = current.low + static_cast<std::int64_t>(i);
                for (const auto& [j, w] : jumps) {
                    const std::int64_t g = h + j;
                    if (g < lo || g > hi) continue;
                    const auto t = static_cast<std::size_t>(g - lo);
                    scratch = w * c;
                    next.counts[t] += scratch;
                    if (query_.track_area) {
                        // w * (area + count * (h + g))
                        scratch *= (h + g);
                        scratch += w * current.doubled_area[i];
                        next.doubled_area[t] += scratch;
                    }
                }
            }
            current = std::move(next);
            if (query_.keep_history) rows_.push_back(current);
        }
        if (!query_.keep_history) rows_.push_back(std::move(current));
    }

    DirectedQuery query_;
    std::vector<Row> rows_;
};

using CountTable = BasicCountTable<BigInt>;

/// Exact number of n-step paths from `start` to `end` (or anywhere) with
/// integer jump weights; constrained paths never go below altitude 0.
inline BigInt count_directed(const JumpPolynomial& jumps, std::int64_t n, std::int64_t start,
                             std::optional<std::int64_t> end, bool constrained)
{
    detail::require(jumps.has_integer_weights(), "count_directed needs integer weights; use weighted_count_directed");
    if (constrained && end && *end < 0) return 0;
    DirectedQuery q{jumps, n, start, end, constrained, false, false};
    return CountTable(q).final_count();
}

inline BigRational weighted_count_directed(const JumpPolynomial& jumps, std::int64_t n, std::int64_t start,
                                           std::optional<std::int64_t> end, bool constrained)
{
    if (constrained && end && *end < 0) return 0;
    DirectedQuery q{jumps, n, start, end, constrained, false, false};
    return BasicCountTable<BigRational>(q).final_count();
}

struct ExcursionAreaStats {
    BigInt count;
    BigRational total_area;  // trapezoid area summed over all excursions
    BigRational mean() const { return total_area / BigRational(count); }
};

inline ExcursionAreaStats excursion_area_stats(const JumpPolynomial& jumps, std::int64_t n)
{
    detail::require(jumps.has_integer_weights(), "excursion area needs integer weights");
    DirectedQuery q{jumps, n, 0, 0, true, true, false};
    CountTable table(q);
    return {table.final_count(), table.final_area_sum()};
}

/// Mean trapezoid area under the excursions of length n.
inline BigRational mean_excursion_area(const JumpPolynomial& jumps, std::int64_t n)
{
    ExcursionAreaStats s = excursion_area_stats(jumps, n);
    if (s.count == 0) throw PreconditionError("no excursions of length " + std::to_string(n));
    return s.mean();
}

} // namespace slopewalk
