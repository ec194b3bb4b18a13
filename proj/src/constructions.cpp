#include "lagrangia/constructions.hpp"

#include <charconv>

namespace lagrangia {

namespace {

int parse_int(const std::string& token, const std::string& whole) {
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty())
        throw HypergraphError("bad integer '" + token + "' in family spec '" + whole + "'");
    return value;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw HypergraphError(what);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    require(colon != std::string::npos && colon > 0, "family spec '" + text + "' needs the form KIND:params");
    const std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    if (kind == "H") {
        const auto next = rest.find(':');
        require(next != std::string::npos, "extension spec '" + text + "' needs H:p:<spec>");
        spec.kind = Kind::extension;
        spec.params = {parse_int(rest.substr(0, next), text)};
        spec.inner = std::make_shared<FamilySpec>(parse(rest.substr(next + 1)));
        return spec;
    }

    std::vector<int> params;
    std::size_t start = 0;
    while (true) {
        const auto next = rest.find(':', start);
        params.push_back(parse_int(rest.substr(start, next - start), text));
        if (next == std::string::npos) break;
        start = next + 1;
    }

    struct Entry {
        const char* name;
        Kind kind;
        std::size_t arity;
    };
    static constexpr Entry kinds[] = {
        {"K", Kind::complete, 2},     {"M", Kind::matching, 2}, {"L", Kind::linear_star, 2},
        {"T", Kind::turan_blowup, 3}, {"F", Kind::f_family, 3}, {"G", Kind::g_family, 2},
    };
    for (const auto& entry : kinds) {
        if (kind != entry.name) continue;
        require(params.size() == entry.arity, "family spec '" + text + "' expects " +
                                                   std::to_string(entry.arity) + " parameters");
        spec.kind = entry.kind;
        spec.params = std::move(params);
        return spec;
    }
    throw HypergraphError("unknown family kind '" + kind + "'");
}

std::string FamilySpec::to_string() const {
    static const char* names[] = {"K", "M", "L", "T", "F", "G", "H"};
    std::string out = names[static_cast<int>(kind)];
    for (int p : params) out += ":" + std::to_string(p);
    if (kind == Kind::extension && inner) out += ":" + inner->to_string();
    return out;
}

Hypergraph construct(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilySpec::Kind::complete: return complete_graph(p.at(0), p.at(1));
        case FamilySpec::Kind::matching: return matching_graph(p.at(0), p.at(1));
        case FamilySpec::Kind::linear_star: return linear_star(p.at(0), p.at(1));
        case FamilySpec::Kind::turan_blowup: return turan_graph(p.at(0), p.at(1), p.at(2));
        case FamilySpec::Kind::f_family: return family_F(p.at(0), p.at(1), p.at(2));
        case FamilySpec::Kind::g_family: return family_G(p.at(0), p.at(1));
        case FamilySpec::Kind::extension:
            require(spec.inner != nullptr, "extension spec without inner family");
            return extension(construct(*spec.inner), p.at(0));
    }
    throw HypergraphError("unhandled family kind");
}

Hypergraph complete_graph(int r, int p) {
    require(r >= 1 && p >= 0, "complete graph needs r >= 1 and p >= 0");
    require(p <= kMaxVertices, "complete graph too large");
    return Hypergraph::from_sets(r, p, subsets_of_size(full_set(p), r));
}

Hypergraph matching_graph(int r, int t) {
    require(r >= 1 && t >= 0, "matching needs r >= 1 and t >= 0");
    require(r * t <= kMaxVertices, "matching too large");
    std::vector<VertexSet> edges;
    for (int k = 0; k < t; ++k) edges.push_back(full_set(r) << (k * r));
    return Hypergraph::from_sets(r, r * t, std::move(edges));
}

Hypergraph linear_star(int r, int t) {
    require(r >= 2 && t >= 0, "linear star needs r >= 2 and t >= 0");
    const int n = 1 + t * (r - 1);
    require(n <= kMaxVertices, "linear star too large");
    std::vector<VertexSet> edges;
    for (int k = 0; k < t; ++k) edges.push_back(vertex_bit(1) | (full_set(r - 1) << (1 + k * (r - 1))));
    return Hypergraph::from_sets(r, n, std::move(edges));
}

std::vector<int> balanced_parts(int m, int n) {
    require(m >= 1 && n >= 0, "balanced partition needs m >= 1 and n >= 0");
    const int q = n / m, extra = n % m;
    std::vector<int> parts(m, q);
    for (int k = m - extra; k < m; ++k) ++parts[k];
    return parts;
}

Hypergraph turan_graph(int r, int m, int n) {
    require(r >= 1 && m >= r && n >= m, "T_m^r(n) needs n >= m >= r >= 1");
    return blowup(complete_graph(r, m), balanced_parts(m, n));
}

long long turan_count(int r, int m, int n) {
    require(r >= 1 && m >= r && n >= m, "t_m^r(n) needs n >= m >= r >= 1");
    // e_k over the part sizes, built one part at a time.
    std::vector<long long> e(r + 1, 0);
    e[0] = 1;
    for (int size : balanced_parts(m, n))
        for (int k = r; k >= 1; --k) e[k] += e[k - 1] * size;
    return e[r];
}

Hypergraph family_F(int t, int l, int n) {
    require(t >= 2, "F_{t,l}(n) needs t >= 2");
    require(l >= 0 && l <= t - 1, "F_{t,l}(n) needs 0 <= l <= t-1");
    require(n >= 2 * t && n <= kMaxVertices, "F_{t,l}(n) needs n >= 2t");
    std::vector<VertexSet> edges = subsets_of_size(full_set(2 * t - 1 - l), 2);
    for (int a = 1; a <= l; ++a)
        for (int b = 2 * t - l; b <= n; ++b) edges.push_back(vertex_bit(a) | vertex_bit(b));
    return Hypergraph::from_sets(2, n, std::move(edges));
}

Hypergraph family_G(int k, int n) {
    require(k >= 0 && k <= 4, "G_k(n) needs k in 0..4");
    require(n >= 5 && n <= kMaxVertices, "G_k(n) needs n >= 5");
    auto e = [](Vertex a, Vertex b, Vertex c) { return vertex_bit(a) | vertex_bit(b) | vertex_bit(c); };
    std::vector<VertexSet> edges;
    switch (k) {
        case 0:
            for (int i = 2; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) edges.push_back(e(1, i, j));
            break;
        case 1:
            for (int i = 3; i <= n; ++i) edges.push_back(e(1, 2, i));
            for (VertexSet x : {e(1, 3, 4), e(1, 3, 5), e(1, 4, 5), e(2, 3, 4), e(2, 3, 5), e(2, 4, 5)})
                edges.push_back(x);
            break;
        case 2:
            edges = subsets_of_size(full_set(4), 3);
            for (int i = 5; i <= n; ++i)
                for (Vertex a : {2, 3, 4}) edges.push_back(e(1, a, i));
            break;
        case 3:
            for (int i = 3; i <= n; ++i) edges.push_back(e(1, 2, i));
            for (int i = 4; i <= n; ++i) edges.push_back(e(1, 3, i));
            for (VertexSet x : {e(2, 3, 4), e(2, 3, 5), e(1, 4, 5)}) edges.push_back(x);
            break;
        case 4:
            for (int i = 3; i <= n; ++i) edges.push_back(e(1, 2, i));
            for (int i = 4; i <= n; ++i) {
                edges.push_back(e(1, 3, i));
                edges.push_back(e(2, 3, i));
            }
            break;
    }
    return Hypergraph::from_sets(3, n, std::move(edges));
}

Hypergraph extension(const Hypergraph& f, int p) {
    require(p >= f.order(), "extension core size " + std::to_string(p) + " is smaller than |V(F)| = " +
                                std::to_string(f.order()));
    const int r = f.uniformity();
    require(r >= 2, "extension needs r >= 2");
    const auto covered = pair_coverage(f);

    std::vector<std::pair<Vertex, Vertex>> uncovered;
    for (Vertex i = 1; i <= p; ++i)
        for (Vertex j = i + 1; j <= p; ++j)
            if (i > f.order() || j > f.order() || !contains(covered[i - 1], j)) uncovered.emplace_back(i, j);

    const int n = p + static_cast<int>(uncovered.size()) * (r - 2);
    require(n <= kMaxVertices, "extension exceeds the vertex limit");
    std::vector<VertexSet> edges(f.edges().begin(), f.edges().end());
    int next = p + 1;
    for (auto [i, j] : uncovered) {
        VertexSet e = vertex_bit(i) | vertex_bit(j);
        for (int k = 0; k < r - 2; ++k) e |= vertex_bit(next++);
        edges.push_back(e);
    }
    return Hypergraph::from_sets(r, n, std::move(edges));
}

}  // namespace lagrangia
