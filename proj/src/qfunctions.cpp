#include "qseries/qfunctions.hpp"

namespace qseries {

// Column DP on [N k] = [N-1 k-1] + q^k [N-1 k], keeping one polynomial per
// column k = 0..n while N sweeps 1..Ntop.
std::vector<BigInt> gaussian_binomial(long long Ntop, long long n) {
    if (n < 0 || Ntop < 0 || n > Ntop) return {};
    n = std::min(n, Ntop - n); // symmetry keeps the columns small
    std::vector<std::vector<BigInt>> col(static_cast<std::size_t>(n) + 1);
    col[0] = {BigInt(1)}; // [N choose 0] = 1 for every N
    for (long long N = 1; N <= Ntop; ++N) {
        for (long long k = std::min(n, N); k >= 1; --k) {
            const auto& a = col[static_cast<std::size_t>(k - 1)]; // [N-1 choose k-1]
            const auto& b = col[static_cast<std::size_t>(k)];     // [N-1 choose k]
            std::vector<BigInt> r(
                std::max<std::size_t>(a.size(), b.size() + static_cast<std::size_t>(k)),
                BigInt(0));
            for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
            for (std::size_t i = 0; i < b.size(); ++i)
                r[i + static_cast<std::size_t>(k)] += b[i];
            col[static_cast<std::size_t>(k)] = std::move(r);
        }
    }
    auto& out = col[static_cast<std::size_t>(n)];
    while (!out.empty() && out.back() == 0) out.pop_back(); // strip DP padding
    return std::move(out);
}

BigInt partitions_in_box(long long Nbox, long long M, long long k) {
    if (Nbox < 0 || M < 0 || k < 0) return BigInt(0);
    if (k == 0) return BigInt(1);
    const auto g = gaussian_binomial(Nbox + M, M);
    if (static_cast<std::size_t>(k) >= g.size()) return BigInt(0);
    return g[static_cast<std::size_t>(k)];
}

} // namespace qseries
