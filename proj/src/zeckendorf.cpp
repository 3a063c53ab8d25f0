#include "fiblab/zeckendorf.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiblab {

namespace {

// Shifted-convention values F_1, F_2, ... up to the first value >= a,
// stored with F_s at position s (position 0 unused).
std::vector<mpz_class> shifted_fibs_upto(const mpz_class& a) {
    std::vector<mpz_class> f{0, 1, 2};
    while (f.back() < a) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

}  // namespace

ZeckendorfRep ZeckendorfRep::from_indices(std::vector<std::uint32_t> indices) {
    if (indices.empty()) throw std::invalid_argument("ZeckendorfRep: empty representation");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] == 0) throw std::invalid_argument("ZeckendorfRep: index 0 is excluded");
        if (i > 0 && indices[i] <= indices[i - 1] + 1)
            throw std::invalid_argument(
                indices[i] <= indices[i - 1]
                    ? "ZeckendorfRep: indices must be strictly ascending"
                    : "ZeckendorfRep: adjacent indices violate a_s * a_{s+1} = 0");
    }
    ZeckendorfRep rep;
    rep.indices_ = std::move(indices);
    return rep;
}

ZeckendorfRep ZeckendorfRep::from_coeff_string(const std::string& s) {
    std::vector<std::uint32_t> indices;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            indices.push_back(static_cast<std::uint32_t>(i + 1));
        else if (s[i] != '0')
            throw std::invalid_argument("ZeckendorfRep: coefficient string must be over {0,1}");
    }
    if (s.empty() || s.back() != '1')
        throw std::invalid_argument("ZeckendorfRep: leading coefficient a_n must be 1");
    return from_indices(std::move(indices));
}

std::string ZeckendorfRep::coeff_string() const {
    std::string s(indices_.back(), '0');
    for (const auto i : indices_) s[i - 1] = '1';
    return s;
}

ZeckendorfRep zeckendorf_encode(const mpz_class& a) {
    if (a <= 0) throw std::invalid_argument("zeckendorf_encode: argument must be >= 1");
    const auto f = shifted_fibs_upto(a);

    std::vector<std::uint32_t> indices;
    mpz_class rest = a;
    std::size_t s = f.size() - 1;
    while (rest > 0) {
        while (f[s] > rest) --s;
        indices.push_back(static_cast<std::uint32_t>(s));
        rest -= f[s];
        // greedy remainder is below F_{s-1}, so adjacency cannot occur
        if (s < 2) break;
        s -= 2;
    }
    std::reverse(indices.begin(), indices.end());
    return ZeckendorfRep::from_indices(std::move(indices));
}

mpz_class zeckendorf_decode(const ZeckendorfRep& rep) {
    const auto& idx = rep.indices();
    std::vector<mpz_class> f{0, 1, 2};
    while (f.size() <= idx.back()) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    mpz_class sum = 0;
    for (const auto i : idx) sum += f[i];
    return sum;
}

std::uint64_t zeckendorf_uniqueness_count(const mpz_class& a, std::uint32_t max_index) {
    if (a <= 0) throw std::invalid_argument("zeckendorf_uniqueness_count: argument must be >= 1");
    std::vector<mpz_class> f{0, 1, 2};
    while (f.size() <= static_cast<std::size_t>(max_index) + 2)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    if (max_index == 0 || f[max_index] < a)
        throw std::invalid_argument("zeckendorf_uniqueness_count: F_{max_index} must be >= a");

    // Depth-first enumeration over indices max_index..1, highest first, with
    // the remaining-sum prune  sum_{s<=k} F_s = F_{k+2} - 2  (Shifted).
    std::uint64_t count = 0;
    const auto descend = [&](auto&& self, std::uint32_t k, const mpz_class& rest) -> void {
        if (rest == 0) {
            ++count;
            return;
        }
        if (k == 0) return;
        if (f[k + 2] - 2 < rest) return;  // sum F_1..F_k = F_{k+2} - 2 cannot reach rest
        if (f[k] <= rest) self(self, k >= 2 ? k - 2 : 0, rest - f[k]);  // take k, skip k-1
        self(self, k - 1, rest);
    };
    descend(descend, max_index, a);
    return count;
}

}  // namespace fiblab
