#include "zsf/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsf {

namespace {

// Column echelon elimination of `m` (r rows by k columns, column-major),
// applying every column operation to `track` as well. Rows of `track` are
// carried along unreduced; on return, columns of `m` that became zero span
// exactly the column relations, realized by the same columns of `track`.
void eliminate(std::vector<IntVec>& cols, std::vector<IntVec>& track, std::size_t rows) {
    const std::size_t k = cols.size();
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < rows && pivot < k; ++row) {
        // gcd-chain all entries of this row into one column
        while (true) {
            std::size_t best = k;
            for (std::size_t j = pivot; j < k; ++j) {
                if (cols[j][row] == 0) continue;
                if (best == k || abs(cols[j][row]) < abs(cols[best][row])) best = j;
            }
            if (best == k) break;  // row already clear
            std::swap(cols[pivot], cols[best]);
            std::swap(track[pivot], track[best]);
            bool others = false;
            for (std::size_t j = pivot + 1; j < k; ++j) {
                if (cols[j][row] == 0) continue;
                BigInt q = cols[j][row] / cols[pivot][row];  // truncated division
                if (q != 0) {
                    for (std::size_t i = 0; i < rows; ++i) cols[j][i] -= q * cols[pivot][i];
                    for (std::size_t i = 0; i < track[j].size(); ++i) track[j][i] -= q * track[pivot][i];
                }
                if (cols[j][row] != 0) others = true;
            }
            if (!others) {
                ++pivot;
                break;
            }
        }
    }
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

void check_rect(const IntMat& columns, std::size_t& rows) {
    rows = columns.empty() ? 0 : columns[0].size();
    for (auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("kernel: columns of unequal dimension");
}

}  // namespace

KernelBasis integer_kernel_basis(const IntMat& columns) {
    std::size_t rows = 0;
    check_rect(columns, rows);
    const std::size_t k = columns.size();
    std::vector<IntVec> cols = columns;
    std::vector<IntVec> track(k, IntVec(k, 0));
    for (std::size_t j = 0; j < k; ++j) track[j][j] = 1;
    eliminate(cols, track, rows);
    KernelBasis basis;
    for (std::size_t j = 0; j < k; ++j)
        if (is_zero(cols[j])) basis.vectors.push_back(track[j]);
    return basis;
}

BigInt kernel_sum_gcd(const IntMat& columns) {
    std::size_t rows = 0;
    check_rect(columns, rows);
    const std::size_t k = columns.size();
    std::vector<IntVec> cols = columns;
    std::vector<IntVec> ones(k, IntVec(1, 1));  // entry-sum of the implicit z
    eliminate(cols, ones, rows);
    BigInt g = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (is_zero(cols[j])) g = gcd(g, ones[j][0]);
    return abs(g);
}

std::optional<IntVec> kernel_sum_witness(const IntMat& columns) {
    KernelBasis basis = integer_kernel_basis(columns);
    for (auto& z : basis.vectors) {
        BigInt s = 0;
        for (auto& x : z) s += x;
        if (s != 0) return z;
    }
    return std::nullopt;
}

}  // namespace zsf
