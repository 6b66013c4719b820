#include "zsf/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zsf {

GroupSubset::GroupSubset(i64 modulus, std::vector<i64> elems) : n(modulus), elements(std::move(elems)) {
    if (n < 1) throw std::invalid_argument("GroupSubset: modulus must be >= 1");
    for (i64 g : elements)
        if (g < 0 || g >= n) throw std::invalid_argument("GroupSubset: residue out of [0, n)");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

bool GroupSubset::contains(i64 g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

std::size_t GroupSubset::index_of(i64 g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || *it != g) throw std::invalid_argument("element not in subset");
    return static_cast<std::size_t>(it - elements.begin());
}

GroupSubset GroupSubset::with(i64 g) const {
    auto e = elements;
    e.push_back(g);
    return GroupSubset(n, std::move(e));
}

GroupSubset GroupSubset::without(i64 g) const {
    std::vector<i64> e;
    e.reserve(elements.size());
    for (i64 x : elements)
        if (x != g) e.push_back(x);
    return GroupSubset(n, std::move(e));
}

std::string GroupSubset::text() const {
    std::ostringstream os;
    os << n << ':';
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) os << ',';
        os << elements[i];
    }
    return os.str();
}

GroupSubset GroupSubset::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("subset text must be n:g1,g2,...");
    i64 n = std::stoll(s.substr(0, colon));
    std::vector<i64> elems;
    std::string rest = s.substr(colon + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        i64 v = std::stoll(tok);
        v %= n;
        if (v < 0) v += n;
        elems.push_back(v);
    }
    return GroupSubset(n, std::move(elems));
}

i64 element_order(i64 n, i64 g) {
    if (n < 1 || g < 0 || g >= n) throw std::invalid_argument("element_order: residue out of range");
    return n / std::gcd(n, g);
}

i64 inverse_mod(i64 a, i64 m) {
    i64 r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: not invertible");
    return ((s0 % m) + m) % m;
}

i64 sigma_rep(i64 n, i64 e, i64 h) {
    if (e < 0 || e >= n || h < 0 || h >= n) throw std::invalid_argument("sigma_rep: residue out of range");
    i64 t = std::gcd(n, e == 0 ? n : e);
    if (h % t != 0) throw std::invalid_argument("sigma_rep: h not in <e>");
    i64 ord = n / t;  // = element_order(n, e)
    if (e == 0) return 1;  // <0> = {0}, representative of 0 is 1 = ord
    i64 ep = (e / t) % ord;
    i64 a = (h / t) % ord * inverse_mod(ep, ord) % ord;
    return a == 0 ? ord : a;
}

i64 generated_subgroup_order(const GroupSubset& g0) {
    i64 g = g0.n;
    for (i64 x : g0.elements) g = std::gcd(g, x);
    return g0.n / g;
}

std::vector<i64> units_mod(i64 n) {
    if (n == 1) return {0};
    std::vector<i64> us;
    for (i64 u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) us.push_back(u);
    return us;
}

GroupSubset unit_image(const GroupSubset& g0, i64 u) {
    std::vector<i64> e;
    e.reserve(g0.size());
    for (i64 g : g0.elements) e.push_back(g * u % g0.n);
    return GroupSubset(g0.n, std::move(e));
}

GroupSubset canonical_under_units(const GroupSubset& g0) {
    GroupSubset best = g0;
    for (i64 u : units_mod(g0.n)) {
        GroupSubset img = unit_image(g0, u);
        if (img.elements < best.elements) best = std::move(img);
    }
    return best;
}

}  // namespace zsf
