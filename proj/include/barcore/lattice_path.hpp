#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace barcore {

// Right < Up so that std::next_permutation walks step strings in
// lexicographic order; the whole library iterates paths in that order.
enum class Step : unsigned char { Right = 0, Up = 1 };

// Monotone path from (0,0) to (right_count, up_count).
class LatticePath {
public:
    LatticePath(std::vector<Step> steps, std::int64_t right_count, std::int64_t up_count);

    // "RRR...UUU" — lexicographically first path.
    static LatticePath first(std::int64_t right_count, std::int64_t up_count);

    // Path whose x-th Right step has heights[x-1] Up steps before it; heights
    // must be non-decreasing with values in [0, up_count].
    static LatticePath from_heights(const std::vector<std::int64_t>& heights,
                                    std::int64_t up_count);

    // Parses "RUR" etc.; counts are inferred from the string.
    static LatticePath parse(const std::string& text);

    const std::vector<Step>& steps() const { return steps_; }
    std::int64_t right_count() const { return right_count_; }
    std::int64_t up_count() const { return up_count_; }

    // heights()[x-1] = number of Up steps before the x-th Right step; the
    // cells below the path in column x are exactly those with y <= heights()[x-1].
    std::vector<std::int64_t> heights() const;

    // Advances to the lexicographic successor; false once past the last path.
    bool advance();

    std::string to_string() const;  // "RUR"

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<Step> steps_;
    std::int64_t right_count_ = 0;
    std::int64_t up_count_ = 0;
};

// Invokes fn on every monotone path to (right_count, up_count), in
// lexicographic order; C(right_count + up_count, right_count) invocations.
void for_each_path(std::int64_t right_count, std::int64_t up_count,
                   const std::function<void(const LatticePath&)>& fn);

}  // namespace barcore
