#include "zsf/sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace zsf {

Seq::Seq(GroupSubset b, std::map<i64, i64> m) : base(std::move(b)), mult(std::move(m)) {
    for (auto it = mult.begin(); it != mult.end();) {
        if (it->second < 0) throw std::invalid_argument("Seq: negative multiplicity");
        if (!base.contains(it->first)) throw std::invalid_argument("Seq: support not in base subset");
        if (it->second == 0)
            it = mult.erase(it);
        else
            ++it;
    }
}

i64 Seq::length() const {
    i64 len = 0;
    for (auto& [g, v] : mult) len += v;
    return len;
}

i64 Seq::multiplicity(i64 g) const {
    auto it = mult.find(g);
    return it == mult.end() ? 0 : it->second;
}

void Seq::add(i64 g, i64 count) {
    if (count < 0) throw std::invalid_argument("Seq::add: negative count");
    if (count == 0) return;
    if (!base.contains(g)) throw std::invalid_argument("Seq::add: element not in base subset");
    mult[g] += count;
}

std::string Seq::text() const {
    if (mult.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, v] : mult) {
        if (!first) os << "·";
        first = false;
        os << g;
        if (v > 1) os << '^' << v;
    }
    return os.str();
}

i64 seq_sum(const Seq& s) {
    i64 n = s.base.n, acc = 0;
    for (auto& [g, v] : s.mult) acc = (acc + (g % n) * (v % n)) % n;
    return acc;
}

Rat cross_number(const Seq& s) {
    Rat k = 0;
    for (auto& [g, v] : s.mult) k += Rat(v, element_order(s.base.n, g));
    return k;
}

i64 sigma_seq(const Seq& s, i64 e) {
    i64 acc = 0;
    for (auto& [g, v] : s.mult) acc += v * sigma_rep(s.base.n, e, g);
    return acc;
}

BitVec subsequence_sums(const Seq& s) {
    BitVec sums(s.base.n);
    for (auto& [g, v] : s.mult)
        for (i64 i = 0; i < v; ++i) sums.close_with(g);
    return sums;
}

bool is_zero_sum_free(const Seq& s) { return !subsequence_sums(s).test(0); }

bool is_minimal_zero_sum(const Seq& s) {
    if (s.is_empty() || seq_sum(s) != 0) return false;
    // remove one copy of the least support element; minimality is equivalent
    // to the rest being zero-sum free
    Seq rest = s;
    auto it = rest.mult.begin();
    if (--it->second == 0) rest.mult.erase(it);
    return is_zero_sum_free(rest);
}

}  // namespace zsf
