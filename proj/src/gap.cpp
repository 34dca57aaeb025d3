/*
   Copyright 2026 The lacunary authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lacunary/gap.hpp"

namespace lacunary {

namespace {

bool joins(std::span<const BigInt> a, std::size_t start, std::size_t n, unsigned weight)
{
    return a[n] <= a[start] + weight * binomial(static_cast<unsigned long>(n - start), 2);
}

}  // namespace

GapPartition gap_partition(std::span<const BigInt> alphas, unsigned weight)
{
    if (weight != 1 && weight != 2) throw DomainError("gap_partition: weight must be 1 or 2");
    for (std::size_t i = 1; i < alphas.size(); ++i)
        if (alphas[i] < alphas[i - 1]) throw DomainError("gap_partition: exponents are not ascending");
    GapPartition out;
    out.weight = weight;
    if (alphas.empty()) return out;
    std::size_t start = 0;
    for (std::size_t n = 1; n < alphas.size(); ++n) {
        if (joins(alphas, start, n, weight)) continue;
        out.intervals.push_back({start, n});
        start = n;
    }
    out.intervals.push_back({start, alphas.size()});
    return out;
}

bool partition_is_exact(std::span<const BigInt> alphas, const GapPartition& part)
{
    std::size_t expect = 0;
    for (const Interval& iv : part.intervals) {
        if (iv.begin != expect || iv.end <= iv.begin) return false;
        for (std::size_t n = iv.begin + 1; n < iv.end; ++n)
            if (!joins(alphas, iv.begin, n, part.weight)) return false;
        if (iv.end < alphas.size() && joins(alphas, iv.begin, iv.end, part.weight)) return false;
        expect = iv.end;
    }
    return expect == alphas.size();
}

}  // namespace lacunary
