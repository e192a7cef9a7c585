#include "homalg/algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace homalg {

ExteriorAlgebra::ExteriorAlgebra(std::vector<int> degrees)
    : c_(static_cast<std::uint32_t>(degrees.size())), degrees_(std::move(degrees)) {
    if (c_ > 20) throw std::invalid_argument("too many exterior generators (max 20)");
    for (int d : degrees_)
        if (d <= 0 || d % 2 == 0)
            throw std::invalid_argument("exterior generator degree must be odd and positive, got " +
                                        std::to_string(d));

    // lexicographic listing of square-free monomials by index word
    masks_.reserve(1u << c_);
    std::function<void(std::uint32_t, std::uint32_t)> emit = [&](std::uint32_t mask,
                                                                 std::uint32_t next) {
        masks_.push_back(mask);
        for (std::uint32_t i = next; i < c_; ++i) emit(mask | (1u << i), i + 1);
    };
    emit(0, 0);

    index_of_mask_.assign(1u << c_, 0);
    basis_degree_.assign(masks_.size(), 0);
    top_degree_ = 0;
    for (std::uint32_t i = 0; i < masks_.size(); ++i) {
        index_of_mask_[masks_[i]] = i;
        int d = 0;
        for (std::uint32_t g = 0; g < c_; ++g)
            if (masks_[i] & (1u << g)) d += degrees_[g];
        basis_degree_[i] = d;
        top_degree_ = std::max(top_degree_, d);
    }
    by_degree_.assign(top_degree_ + 1, {});
    for (std::uint32_t i = 0; i < masks_.size(); ++i) by_degree_[basis_degree_[i]].push_back(i);
}

bool ExteriorAlgebra::product(std::uint32_t a, std::uint32_t b, std::uint32_t& out_index,
                              int& out_sign) const {
    std::uint32_t ma = masks_[a], mb = masks_[b];
    if (ma & mb) return false;
    // sign: each generator of b moves past the generators of a above it
    int inversions = 0;
    for (std::uint32_t g = 0; g < c_; ++g) {
        if (!(mb & (1u << g))) continue;
        std::uint32_t higher = ma >> (g + 1);
        inversions += std::popcount(higher);
    }
    out_index = index_of_mask_[ma | mb];
    out_sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

const std::vector<std::uint32_t>& ExteriorAlgebra::basis_of_degree(int d) const {
    if (d < 0 || d > top_degree_) return empty_;
    return by_degree_[d];
}

std::string ExteriorAlgebra::basis_label(std::uint32_t basis_index) const {
    std::uint32_t mask = masks_[basis_index];
    if (!mask) return "1";
    std::string s;
    for (std::uint32_t g = 0; g < c_; ++g)
        if (mask & (1u << g)) {
            if (!s.empty()) s += "^";
            s += "xi" + std::to_string(g + 1);
        }
    return s;
}

std::uint64_t PolyCoordRing::piece_dim(int n) const {
    if (n < 0) return 0;
    std::vector<std::uint64_t> count(n + 1, 0);
    count[0] = 1;
    for (int w : weights_)
        for (int d = w; d <= n; ++d) count[d] += count[d - w];
    return count[n];
}

std::vector<std::vector<int>> PolyCoordRing::monomials_of_weight(int n) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(weights_.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == weights_.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int a = 0; a * weights_[i] <= rem; ++a) {
            cur[i] = a;
            rec(i + 1, rem - a * weights_[i]);
        }
        cur[i] = 0;
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace homalg
