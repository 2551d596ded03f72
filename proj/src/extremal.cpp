#include "ordtile/extremal.hpp"

#include <functional>
#include <stdexcept>

#include "ordtile/colouring.hpp"

namespace ordtile {

namespace {

OrderedGraph multipartite_with_extra_edges(const std::vector<int>& class_sizes,
                                           const std::function<bool(int, int, int, int)>& keep) {
    // keep(u, cu, v, cv) decides each cross-class pair; intra-class pairs are
    // never adjacent.
    int n = 0;
    for (int s : class_sizes) n += s;
    IntervalColouring classes{class_sizes};
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int cu = classes.class_of(u), cv = classes.class_of(v);
            if (cu != cv && keep(u, cu, v, cv)) edges.emplace_back(u, v);
        }
    return OrderedGraph(n, edges);
}

}  // namespace

F1Construction build_f1(int n, int r, int i, int j) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (i == j || i < 1 || j < 1 || i > r + 1 || j > r + 1)
        throw std::invalid_argument("need distinct i, j in [r+1]");
    if (n < r + 1) throw std::invalid_argument("need n >= r+1");
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds the vertex cap");

    int q = (n - 1) / r;
    std::vector<int> sizes(r + 1, 0);
    sizes[i - 1] = 1;
    sizes[j - 1] = q;
    // Remaining n-1-q vertices over the other r-1 classes, as equal as
    // possible, remainder pushed to the later classes.
    int rest = n - 1 - q;
    int base = rest / (r - 1);
    int extra = rest % (r - 1);
    std::vector<int> open;
    for (int k = 1; k <= r + 1; ++k)
        if (k != i && k != j) open.push_back(k);
    for (std::size_t idx = 0; idx < open.size(); ++idx) {
        int bonus = (static_cast<int>(open.size()) - static_cast<int>(idx) <= extra) ? 1 : 0;
        sizes[open[idx] - 1] = base + bonus;
    }

    IntervalColouring classes{sizes};
    int u = classes.bounds(i).first;
    F1Construction out;
    out.class_sizes = sizes;
    out.u = u;
    out.graph = multipartite_with_extra_edges(sizes, [&](int a, int ca, int b, int cb) {
        if (a == u || b == u) {
            int other_class = (a == u) ? cb : ca;
            return other_class != j;
        }
        (void)ca;
        (void)cb;
        return true;
    });
    out.min_degree = out.graph.min_degree();
    return out;
}

CompleteMultipartite build_f2(const OrderedGraph& pattern, int n,
                              const Rational& chi_star_exact) {
    if (n % pattern.h() != 0)
        throw std::invalid_argument("pattern size must divide n");
    if (chi_star_exact <= Rational(0))
        throw std::invalid_argument("chi* must be positive");
    long long ell = (Rational(n) / chi_star_exact + Rational(1)).floor();
    if (ell < 1) throw std::invalid_argument("degenerate class size");
    int k = static_cast<int>((n + ell - 1) / ell);
    std::vector<int> sizes(k - 1, static_cast<int>(ell));
    int last = static_cast<int>(n - (k - 1) * ell);
    if (last > 0) sizes.push_back(last);
    return CompleteMultipartite(sizes);
}

AdversarialLabelling adversarial_labelling(const CompleteMultipartite& b,
                                           const OrderedGraph& pattern, long long budget) {
    long long nodes = 0;
    for (const auto& ordering : distinct_orderings(b)) {
        TilingAnswer answer = perfect_tiling(to_ordered_graph(ordering), pattern, budget);
        nodes += answer.nodes;
        if (answer.status == TilingStatus::Timeout)
            throw TimeoutError("adversarial labelling search inconclusive (budget)");
        if (answer.status == TilingStatus::NoPerfect)
            return AdversarialLabelling{ordering, nodes};
    }
    throw std::runtime_error(
        "every ordering tiles perfectly: construction or chi* input is wrong");
}

F3Construction build_f3(const OrderedGraph& pattern, int n) {
    int r = interval_chromatic(pattern);
    if (r < 2) throw std::invalid_argument("pattern needs interval chromatic number >= 2");
    int parts = r - 1;
    if (n < parts) throw std::invalid_argument("need n >= chi_< - 1");
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds the vertex cap");
    int base = n / parts;
    int extra = n % parts;
    std::vector<int> sizes(parts, base);
    for (int idx = parts - extra; idx < parts; ++idx) sizes[idx] += 1;
    F3Construction out;
    out.class_sizes = sizes;
    out.graph = multipartite_with_extra_edges(sizes, [](int, int, int, int) { return true; });
    out.min_degree = out.graph.min_degree();
    return out;
}

}  // namespace ordtile
