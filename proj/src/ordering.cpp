#include "vanish/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanish {

Ordering Ordering::from_rank_sequence(std::vector<Vertex> by_rank) {
    Ordering o;
    o.by_rank_ = std::move(by_rank);
    for (size_t i = 0; i < o.by_rank_.size(); ++i) {
        auto [it, inserted] = o.rank_.emplace(o.by_rank_[i], static_cast<int>(i) + 1);
        if (!inserted) throw std::invalid_argument("ordering: repeated vertex");
    }
    return o;
}

Ordering Ordering::increasing(std::vector<Vertex> domain) {
    std::sort(domain.begin(), domain.end());
    return from_rank_sequence(std::move(domain));
}

int Ordering::rank(Vertex v) const {
    auto it = rank_.find(v);
    if (it == rank_.end()) throw std::domain_error("ordering: vertex not in domain");
    return it->second;
}

Ordering Ordering::restrict(const std::vector<Vertex>& T) const {
    std::vector<Vertex> keep;
    for (Vertex v : by_rank_)
        if (std::find(T.begin(), T.end(), v) != T.end()) keep.push_back(v);
    return from_rank_sequence(std::move(keep));
}

Ordering sum(const Ordering& a, const Ordering& b) {
    std::vector<Vertex> seq = a.by_rank();
    seq.insert(seq.end(), b.by_rank().begin(), b.by_rank().end());
    return Ordering::from_rank_sequence(std::move(seq));
}

Ordering sum(const std::vector<Ordering>& parts) {
    Ordering acc;
    for (const auto& p : parts) acc = sum(acc, p);
    return acc;
}

long long inversions(const Ordering& sigma) {
    const auto& seq = sigma.by_rank();
    long long count = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++count;
    return count;
}

}  // namespace vanish
