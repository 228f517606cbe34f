#include "gzhess/kogan.hpp"

#include "gzhess/parallel.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gzhess {

namespace {

// Reading order of H edges: band j-i descending, then i ascending.
std::vector<Edge> h_reading_order(int n) {
    std::vector<Edge> edges;
    for (int band = n - 2; band >= 0; --band)
        for (int i = 1; i + band <= n - 1; ++i) edges.push_back(Edge::H(i, i + band));
    return edges;
}

// Reading order of V edges: band j-i-1 descending, then i descending.
std::vector<Edge> v_reading_order(int n) {
    std::vector<Edge> edges;
    for (int band = n - 2; band >= 0; --band)
        for (int i = n - 1 - band; i >= 1; --i) edges.push_back(Edge::V(i, i + band + 1));
    return edges;
}

int letter(const Edge& e, int n) { return e.is_h() ? e.j : n - e.i; }

KoganWord read_word(const FaceDiagram& f, const std::vector<Edge>& order) {
    KoganWord out;
    for (const Edge& e : order)
        if (f.has_edge(e)) out.word.push_back(letter(e, f.n()));
    auto [w, reduced] = product_of_word(f.n(), out.word);
    out.w = std::move(w);
    out.reduced = reduced;
    return out;
}

using FaceTable = std::map<Permutation, std::vector<FaceDiagram>>;

FaceTable scan_faces(int n, const std::vector<Edge>& order, unsigned threads) {
    const std::size_t bits = order.size();
    if (bits > 28) throw std::invalid_argument("Kogan subset scan too large");
    const std::size_t total = std::size_t{1} << bits;
    const std::size_t chunk = 1024;
    const std::size_t chunks = (total + chunk - 1) / chunk;
    std::vector<std::vector<std::pair<Permutation, FaceDiagram>>> found(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        for (std::size_t mask = c * chunk; mask < std::min(total, (c + 1) * chunk); ++mask) {
            Permutation w = Permutation::identity(n);
            int letters = 0;
            for (std::size_t b = 0; b < bits; ++b)
                if (mask >> b & 1) {
                    w = w.times_simple(letter(order[b], n));
                    ++letters;
                }
            if (w.length() != letters) continue;
            std::set<Edge> edges;
            for (std::size_t b = 0; b < bits; ++b)
                if (mask >> b & 1) edges.insert(order[b]);
            found[c].emplace_back(std::move(w), FaceDiagram(n, std::move(edges)));
        }
    });
    FaceTable table;
    for (auto& part : found)
        for (auto& [w, f] : part) table[w].push_back(std::move(f));
    for (auto& [w, faces] : table) std::sort(faces.begin(), faces.end());
    return table;
}

const FaceTable& cached_table(int n, bool dual, unsigned threads) {
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::unique_ptr<FaceTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n, dual}];
    if (!slot) slot = std::make_unique<FaceTable>(scan_faces(n, dual ? v_reading_order(n) : h_reading_order(n), threads));
    return *slot;
}

}  // namespace

KoganWord kogan_word(const FaceDiagram& f) {
    if (!f.v_edges().empty()) throw std::invalid_argument("kogan_word: face has vertical edges");
    return read_word(f, h_reading_order(f.n()));
}

KoganWord dual_kogan_word(const FaceDiagram& f) {
    if (!f.h_edges().empty()) throw std::invalid_argument("dual_kogan_word: face has horizontal edges");
    return read_word(f, v_reading_order(f.n()));
}

const FaceTable& reduced_kogan_faces(int n, unsigned threads) { return cached_table(n, false, threads); }
const FaceTable& reduced_dual_kogan_faces(int n, unsigned threads) { return cached_table(n, true, threads); }

std::vector<FaceDiagram> enumerate_reduced_kogan(int n, const Permutation& u, unsigned threads) {
    if (u.size() != n) throw std::invalid_argument("permutation size mismatch");
    const auto& t = reduced_kogan_faces(n, threads);
    auto it = t.find(u);
    return it == t.end() ? std::vector<FaceDiagram>{} : it->second;
}

std::vector<FaceDiagram> enumerate_reduced_dual_kogan(int n, const Permutation& v, unsigned threads) {
    if (v.size() != n) throw std::invalid_argument("permutation size mismatch");
    const auto& t = reduced_dual_kogan_faces(n, threads);
    auto it = t.find(v);
    return it == t.end() ? std::vector<FaceDiagram>{} : it->second;
}

}  // namespace gzhess
