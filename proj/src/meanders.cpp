#include "meander/meanders.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "meander/errors.hpp"

namespace meander {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
        }
    }
};

}  // namespace

ArchConfiguration ArchConfiguration::from_matching(
    int order, std::vector<std::pair<int, int>> arches) {
    for (auto& [a, b] : arches) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(arches.begin(), arches.end());
    std::vector<std::uint8_t> used(static_cast<std::size_t>(2 * order + 1), 0);
    for (auto& [a, b] : arches) {
        if (a < 1 || b > 2 * order || a == b) {
            throw Error("arch endpoints out of range");
        }
        if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) {
            throw Error("point matched twice");
        }
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    }
    if (static_cast<int>(arches.size()) != order) {
        throw Error("not a perfect matching: expected " + std::to_string(order) +
                    " arches, got " + std::to_string(arches.size()));
    }
    for (const auto& [a, b] : arches) {
        for (const auto& [c, d] : arches) {
            if (a < c && c < b && b < d) {
                throw Error("crossing arches (" + std::to_string(a) + "," +
                            std::to_string(b) + ") and (" + std::to_string(c) + "," +
                            std::to_string(d) + ")");
            }
        }
    }
    ArchConfiguration cfg;
    cfg.order = order;
    cfg.arches = std::move(arches);
    return cfg;
}

ArchConfiguration arch_config_from_dyck(const DyckPath& p) {
    ArchConfiguration cfg;
    cfg.order = p.size();
    cfg.arches = matching_pairs(p);
    return cfg;
}

DyckPath dyck_from_arch_config(const ArchConfiguration& c) {
    std::vector<Step> steps(static_cast<std::size_t>(2 * c.order), Step::East);
    for (const auto& [a, b] : c.arches) {
        steps[static_cast<std::size_t>(a - 1)] = Step::North;
    }
    return DyckPath::from_steps(std::move(steps));
}

ArchConfiguration rainbow(int n) {
    ArchConfiguration cfg;
    cfg.order = n;
    cfg.arches.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        cfg.arches.emplace_back(i, 2 * n + 1 - i);
    }
    return cfg;
}

Meander meander_from_pair(const DyckPath& p, const DyckPath& q) {
    if (p.size() != q.size()) {
        throw SizeMismatch("meander needs equal sizes, got " + std::to_string(p.size()) +
                           " and " + std::to_string(q.size()));
    }
    Meander t;
    t.order = p.size();
    t.upper = arch_config_from_dyck(p);
    t.lower = arch_config_from_dyck(q);
    return t;
}

Meander semimeander_from_dyck(const DyckPath& p) {
    Meander t;
    t.order = p.size();
    t.upper = arch_config_from_dyck(p);
    t.lower = rainbow(p.size());
    return t;
}

int comp(const Meander& t) {
    UnionFind uf(2 * t.order);
    for (const auto& [a, b] : t.upper.arches) {
        uf.unite(a - 1, b - 1);
    }
    for (const auto& [a, b] : t.lower.arches) {
        uf.unite(a - 1, b - 1);
    }
    int components = 0;
    for (int v = 0; v < 2 * t.order; ++v) {
        if (uf.find(v) == v) {
            ++components;
        }
    }
    return components;
}

std::string meander_to_json(const Meander& t) {
    nlohmann::json j;
    j["n"] = t.order;
    auto arches = [](const ArchConfiguration& cfg) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [a, b] : cfg.arches) {
            arr.push_back({a, b});
        }
        return arr;
    };
    j["upper"] = arches(t.upper);
    j["lower"] = arches(t.lower);
    return j.dump();
}

Meander meander_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    auto arches = [&](const char* key) {
        std::vector<std::pair<int, int>> out;
        for (const auto& pair : j.at(key)) {
            out.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        }
        return ArchConfiguration::from_matching(n, std::move(out));
    };
    Meander t;
    t.order = n;
    t.upper = arches("upper");
    t.lower = arches("lower");
    return t;
}

}  // namespace meander
