#include "sparsity/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <regex>
#include <string>

#include "sparsity/error.hpp"

namespace sparsity {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw UsageError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph grid_graph(int rows, int cols) {
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(edges));
}

Graph hypercube(int dimension) {
    int n = 1 << dimension;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dimension; ++b)
            if (int u = v ^ (1 << b); u > v) edges.emplace_back(v, u);
    return Graph(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(edges));
}

Graph clebsch_graph() {
    std::vector<Edge> edges;
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            int w = popcount(static_cast<Mask>(u ^ v));
            if (w == 1 || w == 4) edges.emplace_back(u, v);
        }
    return Graph(16, std::move(edges));
}

namespace {

int to_int(const std::string& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not an integer: " + s);
    return value;
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (c != ' ' && c != '\t') out += c;
    return out;
}

// Splits on '+' that is not nested inside parentheses.
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

void require_bounded(int n, int limit, const std::string& name) {
    if (n < 0 || n > limit) throw UsageError("parameter out of range in " + name);
}

}  // namespace

Graph named(std::string_view raw) {
    std::string name = strip_spaces(raw);
    if (name.rfind("named:", 0) == 0) name = name.substr(6);
    if (auto parts = split_top_level(name, '+'); parts.size() > 1) {
        Graph acc = named(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, named(parts[i]));
        return acc;
    }

    static const std::regex single(R"(^(K|P|C|E|Q|star)_\{?(\d+)\}?$)");
    static const std::regex bipartite(R"(^K_\{?(\d+),(\d+)\}?$)");
    static const std::regex grid(R"(^grid\((\d+),(\d+)\)$)");
    static const std::regex sub(R"(^sub_(\d+)\((.+)\)$)");
    std::smatch m;
    constexpr int kMaxOrder = 1 << 16;
    if (std::regex_match(name, m, single)) {
        std::string kind = m[1];
        int n = to_int(m[2]);
        if (kind == "K") return require_bounded(n, 4096, name), complete_graph(n);
        if (kind == "P") return require_bounded(n, kMaxOrder, name), path_graph(n);
        if (kind == "C") return require_bounded(n, kMaxOrder, name), cycle_graph(n);
        if (kind == "E") return require_bounded(n, kMaxOrder, name), empty_graph(n);
        if (kind == "Q") return require_bounded(n, 16, name), hypercube(n);
        return require_bounded(n, kMaxOrder, name), star_graph(n);
    }
    if (std::regex_match(name, m, bipartite)) {
        int a = to_int(m[1]), b = to_int(m[2]);
        require_bounded(a, 4096, name);
        require_bounded(b, 4096, name);
        return complete_bipartite(a, b);
    }
    if (std::regex_match(name, m, grid)) {
        int a = to_int(m[1]), b = to_int(m[2]);
        require_bounded(a, 1024, name);
        require_bounded(b, 1024, name);
        return grid_graph(a, b);
    }
    if (std::regex_match(name, m, sub)) {
        int p = to_int(m[1]);
        require_bounded(p, 64, name);
        return subdivide(named(m[2].str()), p);
    }
    if (name == "Petersen") return petersen_graph();
    if (name == "Clebsch") return clebsch_graph();
    throw UsageError("unknown graph name: " + std::string(raw));
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

Graph random_tree(int n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.below(v)), v);
    return Graph(n, std::move(edges));
}

Graph bounded_degree_graph(int n, int d, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<int> degree(n, 0);
    std::vector<Edge> edges;
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    const long attempts = 4L * n * std::max(d, 1);
    const long target = static_cast<long>(n) * d / 2;
    for (long i = 0; i < attempts && static_cast<long>(edges.size()) < target && n > 1; ++i) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || adjacent[u][v] || degree[u] >= d || degree[v] >= d) continue;
        adjacent[u][v] = adjacent[v][u] = 1;
        ++degree[u];
        ++degree[v];
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph girth5_graph(int n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);

    std::vector<std::vector<int>> adj(n);
    std::vector<int> dist(n, -1);
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        // Adding {u,v} closes a cycle of length dist(u,v)+1; require that to be >= 5.
        std::vector<int> touched{u};
        std::deque<int> queue{u};
        dist[u] = 0;
        bool close = false;
        while (!queue.empty() && !close) {
            int x = queue.front();
            queue.pop_front();
            if (dist[x] >= 3) continue;
            for (int y : adj[x]) {
                if (dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                touched.push_back(y);
                if (y == v) {
                    close = true;
                    break;
                }
                queue.push_back(y);
            }
        }
        for (int x : touched) dist[x] = -1;
        if (close) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph planar_triangulation(int n, std::uint64_t seed) {
    if (n < 3) return complete_graph(std::max(n, 0));
    Xoshiro256 rng(seed);
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t f = rng.below(faces.size());
        auto [a, b, c] = faces[f];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return Graph(n, std::move(edges));
}

Graph gnm_graph(int n, int m, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    long max_edges = static_cast<long>(n) * (n - 1) / 2;
    m = static_cast<int>(std::min<long>(m, max_edges));
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    std::vector<Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || adjacent[u][v]) continue;
        adjacent[u][v] = adjacent[v][u] = 1;
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph generate(std::string_view raw) {
    std::string spec = strip_spaces(raw);
    static const std::regex call(R"(^(random_tree|bounded_degree|girth5|planar|gnm)\(([\d,]+)\)$)");
    std::smatch m;
    if (!std::regex_match(spec, m, call)) return named(spec);

    std::vector<long long> args;
    for (const auto& part : split_top_level(m[2].str(), ',')) {
        if (part.empty()) throw UsageError("empty generator argument in " + spec);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw UsageError("bad generator argument in " + spec);
        args.push_back(value);
    }
    const std::string family = m[1];
    auto expect = [&](std::size_t count) {
        if (args.size() != count)
            throw UsageError(family + " expects " + std::to_string(count) + " arguments");
        if (args[0] > 100000) throw UsageError("generator size too large: " + spec);
    };
    auto seed = [&](std::size_t i) { return static_cast<std::uint64_t>(args[i]); };
    if (family == "random_tree") return expect(2), random_tree(int(args[0]), seed(1));
    if (family == "bounded_degree")
        return expect(3), bounded_degree_graph(int(args[0]), int(args[1]), seed(2));
    if (family == "girth5") return expect(2), girth5_graph(int(args[0]), seed(1));
    if (family == "planar") return expect(2), planar_triangulation(int(args[0]), seed(1));
    return expect(3), gnm_graph(int(args[0]), int(args[1]), seed(2));
}

}  // namespace sparsity
