#include "vanish/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vanish {

FamilySpec enumerate_family(int m, int k, int ell, const Budget& budget) {
    if (!(m >= k && k > ell && ell >= 1))
        throw std::invalid_argument("enumerate_family: require m >= k > ell >= 1");
    long long possible = binomial(m, k);
    if (possible > 24)
        throw budget_error(
            "enumerate_family: C(m,k) > 24; choose smaller (m,k) or configure a "
            "tighter generator");
    if ((1LL << possible) > budget.max_edge_tests)
        throw budget_error("enumerate_family: subset budget exceeded");

    FamilySpec spec;
    spec.m = m;
    spec.k = k;
    spec.ell = ell;
    spec.B = binomial(m - ell - 1, k - ell - 1) + 1;

    EdgeList all_edges;
    for_each_combination(m, k, [&](const std::vector<int>& e) { all_edges.push_back(e); });

    for (long long mask = 0; mask < (1LL << possible); ++mask) {
        EdgeList edges;
        for (long long b = 0; b < possible; ++b)
            if (mask & (1LL << b)) edges.push_back(all_edges[static_cast<size_t>(b)]);
        Hypergraph H = Hypergraph::from_edges(k, m, std::move(edges));
        if (min_degree(H, ell) >= spec.B) spec.members.push_back(std::move(H));
    }
    return spec;
}

Hypergraph build_extremal_product(const FamilySpec& spec, const Budget& budget) {
    if (spec.members.empty())
        throw std::invalid_argument("build_extremal_product: empty family");
    return tensor_product(spec.members, budget);
}

namespace {

std::vector<int> coordinates(const Hypergraph& product, Vertex v) {
    if (!product.has_labels())
        throw std::invalid_argument("product vertices must carry coordinate labels");
    std::vector<int> out;
    std::stringstream ss(product.label(v));
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

bool disjoint(const Hypergraph& product, Vertex u, Vertex v) {
    auto cu = coordinates(product, u);
    auto cv = coordinates(product, v);
    if (cu.size() != cv.size())
        throw std::invalid_argument("disjoint: coordinate arity mismatch");
    for (size_t i = 0; i < cu.size(); ++i)
        if (cu[i] == cv[i]) return false;
    return true;
}

bool disjointness_characterization_holds(const Hypergraph& product, int ell,
                                         long long max_checks) {
    long long checks = 0;
    bool ok = true;
    for_each_combination(product.vertex_count(), ell, [&](const std::vector<int>& S) {
        if (!ok || checks > max_checks) return;
        ++checks;
        bool pairwise = true;
        for (size_t i = 0; i < S.size() && pairwise; ++i)
            for (size_t j = i + 1; j < S.size(); ++j)
                if (!disjoint(product, S[i], S[j])) { pairwise = false; break; }
        bool covered = product.degree(S) > 0;
        if (pairwise != covered) ok = false;
    });
    return ok;
}

NoOrderCertificate verify_no_vanishing_order(const FamilySpec& spec,
                                             const SearchBudget& budget) {
    Hypergraph product = build_extremal_product(spec);
    NoOrderCertificate cert;
    cert.result = find_vanishing_order(product, spec.ell, budget);
    return cert;
}

}  // namespace vanish
