#include "zsf/atoms.hpp"
#include "zsf/version.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace zsf {

namespace fs = std::filesystem;

namespace {

std::atomic<unsigned> g_tmp_counter{0};

std::string key_name(const GroupSubset& g0) {
    std::ostringstream os;
    os << "atoms-v" << kAtomCacheVersion << "-n" << g0.n << "-";
    if (g0.empty())
        os << "empty";
    else
        for (std::size_t i = 0; i < g0.size(); ++i) {
            if (i) os << '_';
            os << g0.elements[i];
        }
    return os.str();
}

void atomic_write(const fs::path& dest, const std::string& payload, bool binary) {
    fs::create_directories(dest.parent_path());
    fs::path tmp = dest;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(g_tmp_counter.fetch_add(1));
    {
        std::ofstream out(tmp, binary ? std::ios::binary : std::ios::out);
        out.write(payload.data(), (std::streamsize)payload.size());
        if (!out) throw std::runtime_error("cache write failed: " + tmp.string());
    }
    fs::rename(tmp, dest);  // last writer wins; results are deterministic
}

void put_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& s, std::size_t& off) {
    if (off + 4 > s.size()) throw std::runtime_error("truncated atom cache file");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(s[off + i])) << (8 * i);
    off += 4;
    return v;
}

}  // namespace

std::string AtomCache::path_for(const GroupSubset& g0, const std::string& ext) const {
    return (fs::path(dir_) / (key_name(g0) + "." + ext)).string();
}

void AtomCache::store(const AtomSet& atoms, const std::string& ext) const {
    const GroupSubset& g0 = atoms.base;
    if (ext == "json") {
        nlohmann::json j;
        j["schema"] = "atomset/1";
        j["version"] = kAtomCacheVersion;
        j["n"] = g0.n;
        j["elements"] = g0.elements;
        j["complete"] = atoms.complete;
        j["atoms"] = atoms.rows;
        atomic_write(path_for(g0, ext), j.dump() + "\n", false);
    } else if (ext == "bin") {
        std::string s = "ZSFA";
        put_u32(s, kAtomCacheVersion);
        put_u32(s, (std::uint32_t)g0.n);
        put_u32(s, (std::uint32_t)g0.size());
        for (i64 e : g0.elements) put_u32(s, (std::uint32_t)e);
        put_u32(s, (std::uint32_t)atoms.rows.size());
        for (auto& row : atoms.rows)
            for (i64 m : row) put_u32(s, (std::uint32_t)m);
        atomic_write(path_for(g0, ext), s, true);
    } else {
        throw std::invalid_argument("unknown atom cache extension: " + ext);
    }
}

std::optional<AtomSet> AtomCache::load(const GroupSubset& g0, const std::string& ext) const {
    fs::path p = path_for(g0, ext);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    std::string s = buf.str();

    AtomSet atoms{g0, {}, true};
    if (ext == "json") {
        nlohmann::json j = nlohmann::json::parse(s);
        if (j.at("version").get<int>() != kAtomCacheVersion) return std::nullopt;
        if (j.at("n").get<i64>() != g0.n || j.at("elements").get<std::vector<i64>>() != g0.elements)
            throw std::runtime_error("atom cache key mismatch: " + p.string());
        atoms.complete = j.at("complete").get<bool>();
        atoms.rows = j.at("atoms").get<std::vector<std::vector<i64>>>();
    } else if (ext == "bin") {
        if (s.size() < 4 || s.compare(0, 4, "ZSFA") != 0) throw std::runtime_error("bad atom cache magic");
        std::size_t off = 4;
        if (get_u32(s, off) != (std::uint32_t)kAtomCacheVersion) return std::nullopt;
        i64 n = get_u32(s, off);
        std::size_t k = get_u32(s, off);
        std::vector<i64> elems(k);
        for (auto& e : elems) e = get_u32(s, off);
        if (n != g0.n || elems != g0.elements) throw std::runtime_error("atom cache key mismatch: " + p.string());
        std::size_t count = get_u32(s, off);
        atoms.rows.assign(count, std::vector<i64>(k));
        for (auto& row : atoms.rows)
            for (auto& m : row) m = get_u32(s, off);
    } else {
        throw std::invalid_argument("unknown atom cache extension: " + ext);
    }
    return atoms;
}

AtomSet AtomCache::get(const GroupSubset& g0, const EnumLimits& limits, const std::string& ext) const {
    if (auto hit = load(g0, ext)) return *hit;
    AtomSet atoms = enumerate_atoms(g0, limits);
    store(atoms, ext);
    return atoms;
}

}  // namespace zsf
