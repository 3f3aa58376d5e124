#pragma once

#include <cstddef>
#include <vector>

namespace slopewalk {

// Partition of n in multiplicity form: multiplicities[j-1] = e_j, the number
// of parts equal to j, so that sum_j j * e_j = n. The vector has length n.
struct PartitionMultiplicity {
    std::vector<unsigned> multiplicities;

    unsigned size() const
    {
        unsigned n = 0;
        for (std::size_t j = 0; j < multiplicities.size(); ++j) n += static_cast<unsigned>(j + 1) * multiplicities[j];
        return n;
    }

    // Parts in non-increasing order.
    std::vector<unsigned> parts() const
    {
        std::vector<unsigned> out;
        for (std::size_t j = multiplicities.size(); j-- > 0;)
            out.insert(out.end(), multiplicities[j], static_cast<unsigned>(j + 1));
        return out;
    }

    friend bool operator==(const PartitionMultiplicity&, const PartitionMultiplicity&) = default;
};

namespace detail {

inline void enumerate_partitions(unsigned n, unsigned j, unsigned remaining, std::vector<unsigned>& current,
                                 std::vector<PartitionMultiplicity>& out)
{
    if (j == n) {
        // Last slot is forced: remaining must be a multiple of n.
        if (remaining % n != 0) return;
        current[n - 1] = remaining / n;
        out.push_back({current});
        current[n - 1] = 0;
        return;
    }
    for (unsigned e = 0; e * j <= remaining; ++e) {
        current[j - 1] = e;
        enumerate_partitions(n, j + 1, remaining - e * j, current, out);
    }
    current[j - 1] = 0;
}

} // namespace detail

/// Every partition of n exactly once, lexicographically ascending in (e_1, ..., e_n).
inline std::vector<PartitionMultiplicity> partitions(unsigned n)
{
    std::vector<PartitionMultiplicity> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<unsigned> current(n, 0);
    detail::enumerate_partitions(n, 1, n, current, out);
    return out;
}

/// Conjugate (transpose) of a partition given as parts; zero parts are ignored.
inline std::vector<unsigned> conjugate_partition(const std::vector<unsigned>& parts)
{
    unsigned longest = 0;
    for (unsigned p : parts) longest = p > longest ? p : longest;
    std::vector<unsigned> conj(longest, 0);
    for (unsigned p : parts)
        for (unsigned i = 0; i < p; ++i) ++conj[i];
    return conj;
}

} // namespace slopewalk
