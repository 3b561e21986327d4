#include "microcech/nerve.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mcech {

using nlohmann::json;

Nerve Nerve::from_facets(int vertices, std::vector<std::vector<int>> facets)
{
    if (vertices < 0)
        throw FormatError("negative vertex count");
    std::set<std::vector<int>> closure;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty())
            throw FormatError("empty simplex");
        for (int v : f)
            if (v < 0 || v >= vertices)
                throw FormatError("simplex vertex out of range");
        // all nonempty subsets
        int n = (int)f.size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i))
                    s.push_back(f[i]);
            closure.insert(std::move(s));
        }
    }
    Nerve nv;
    nv.vertices_ = vertices;
    for (auto const& s : closure) {
        int k = (int)s.size() - 1;
        if ((int)nv.simp_.size() <= k)
            nv.simp_.resize(k + 1);
        nv.simp_[k].push_back(s);
    }
    nv.index_.resize(nv.simp_.size());
    for (int k = 0; k < (int)nv.simp_.size(); ++k) {
        std::sort(nv.simp_[k].begin(), nv.simp_[k].end());
        for (int i = 0; i < (int)nv.simp_[k].size(); ++i)
            nv.index_[k][nv.simp_[k][i]] = i;
    }
    return nv;
}

int Nerve::count(int k) const
{
    if (k < 0 || k > dim())
        return 0;
    return (int)simp_[k].size();
}

const std::vector<std::vector<int>>& Nerve::simplices(int k) const
{
    static const std::vector<std::vector<int>> empty;
    if (k < 0 || k > dim())
        return empty;
    return simp_[k];
}

int Nerve::index_of(const std::vector<int>& s) const
{
    int k = (int)s.size() - 1;
    if (k < 0 || k > dim())
        return -1;
    auto it = index_[k].find(s);
    return it == index_[k].end() ? -1 : it->second;
}

IntMat Nerve::coboundary_matrix(int k) const
{
    IntMat m(count(k + 1), count(k));
    for (int r = 0; r < count(k + 1); ++r) {
        const auto& s = simp_[k + 1][r];
        for (int i = 0; i <= k + 1; ++i) {
            std::vector<int> face;
            face.reserve(k + 1);
            for (int j = 0; j <= k + 1; ++j)
                if (j != i)
                    face.push_back(s[j]);
            int c = index_of(face);
            if (c < 0)
                throw std::logic_error("nerve not downward closed");
            m.at(r, c) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

int Nerve::components() const
{
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto const& e : simplices(1))
        parent[find(e[0])] = find(e[1]);
    std::set<int> roots;
    for (int v = 0; v < vertices_; ++v)
        roots.insert(find(v));
    return (int)roots.size();
}

std::string Nerve::to_json() const
{
    json j;
    j["vertices"] = vertices_;
    json s = json::array();
    // maximal simplices are enough, but emit everything for transparency
    for (int k = 0; k <= dim(); ++k)
        for (auto const& sx : simp_[k])
            s.push_back(sx);
    j["simplices"] = std::move(s);
    return j.dump();
}

Nerve Nerve::from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw FormatError(std::string("nerve JSON: ") + e.what());
    }
    try {
        int vertices = j.at("vertices").get<int>();
        auto simplices = j.at("simplices").get<std::vector<std::vector<int>>>();
        return from_facets(vertices, std::move(simplices));
    }
    catch (const json::exception& e) {
        throw FormatError(std::string("nerve JSON: ") + e.what());
    }
}

namespace models {

Nerve point() { return Nerve::from_facets(1, {{0}}); }

Nerve circle(int arcs)
{
    if (arcs < 3)
        throw DomainError("a circle nerve needs at least 3 arcs");
    std::vector<std::vector<int>> f;
    for (int i = 0; i < arcs; ++i)
        f.push_back({i, (i + 1) % arcs});
    return Nerve::from_facets(arcs, std::move(f));
}

Nerve sphere()
{
    return Nerve::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Nerve torus()
{
    // vertex-minimal 7-vertex torus: triangles {i,i+1,i+3}, {i,i+2,i+3} mod 7
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return Nerve::from_facets(7, std::move(f));
}

Nerve projective_plane()
{
    return Nerve::from_facets(6, {{0, 1, 2},
                                  {0, 2, 3},
                                  {0, 3, 4},
                                  {0, 4, 5},
                                  {0, 1, 5},
                                  {1, 2, 4},
                                  {2, 3, 5},
                                  {1, 3, 4},
                                  {2, 4, 5},
                                  {1, 3, 5}});
}

}  // namespace models

}  // namespace mcech
