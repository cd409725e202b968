#include "barcore/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace barcore {

LatticePath::LatticePath(std::vector<Step> steps, std::int64_t right_count,
                         std::int64_t up_count)
    : steps_(std::move(steps)), right_count_(right_count), up_count_(up_count) {
    if (right_count_ < 0 || up_count_ < 0)
        throw std::invalid_argument("LatticePath: step counts must be nonnegative");
    std::int64_t rights = 0, ups = 0;
    for (const Step st : steps_) (st == Step::Right ? rights : ups)++;
    if (rights != right_count_ || ups != up_count_)
        throw std::invalid_argument("LatticePath: step counts do not match the sequence");
}

LatticePath LatticePath::first(std::int64_t right_count, std::int64_t up_count) {
    if (right_count < 0 || up_count < 0)
        throw std::invalid_argument("LatticePath: step counts must be nonnegative");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(right_count + up_count));
    steps.insert(steps.end(), static_cast<std::size_t>(right_count), Step::Right);
    steps.insert(steps.end(), static_cast<std::size_t>(up_count), Step::Up);
    return LatticePath(std::move(steps), right_count, up_count);
}

LatticePath LatticePath::from_heights(const std::vector<std::int64_t>& heights,
                                      std::int64_t up_count) {
    std::vector<Step> steps;
    std::int64_t at = 0;
    for (const std::int64_t h : heights) {
        if (h < at || h > up_count)
            throw std::invalid_argument("LatticePath: heights must be non-decreasing in range");
        steps.insert(steps.end(), static_cast<std::size_t>(h - at), Step::Up);
        steps.push_back(Step::Right);
        at = h;
    }
    steps.insert(steps.end(), static_cast<std::size_t>(up_count - at), Step::Up);
    return LatticePath(std::move(steps), static_cast<std::int64_t>(heights.size()), up_count);
}

LatticePath LatticePath::parse(const std::string& text) {
    std::vector<Step> steps;
    std::int64_t rights = 0, ups = 0;
    for (const char c : text) {
        if (c == 'R') { steps.push_back(Step::Right); ++rights; }
        else if (c == 'U') { steps.push_back(Step::Up); ++ups; }
        else throw std::invalid_argument("LatticePath: steps must be 'R' or 'U'");
    }
    return LatticePath(std::move(steps), rights, ups);
}

std::vector<std::int64_t> LatticePath::heights() const {
    std::vector<std::int64_t> h;
    h.reserve(static_cast<std::size_t>(right_count_));
    std::int64_t ups = 0;
    for (const Step st : steps_) {
        if (st == Step::Up) ++ups;
        else h.push_back(ups);
    }
    return h;
}

bool LatticePath::advance() {
    return std::next_permutation(steps_.begin(), steps_.end());
}

std::string LatticePath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (const Step st : steps_) out += (st == Step::Right ? 'R' : 'U');
    return out;
}

void for_each_path(std::int64_t right_count, std::int64_t up_count,
                   const std::function<void(const LatticePath&)>& fn) {
    LatticePath p = LatticePath::first(right_count, up_count);
    do {
        fn(p);
    } while (p.advance());
}

}  // namespace barcore
