#include "gzhess/pipeline.hpp"

#include "gzhess/kogan.hpp"
#include "gzhess/parallel.hpp"
#include "gzhess/tableau.hpp"

#include <algorithm>

namespace gzhess {

std::vector<ATPair> at_pairs(const HessenbergFunction& h) {
    const Permutation wh = w_h(h);
    const Permutation wh_inv = wh.inverse();
    const int target = wh.length();
    std::vector<ATPair> out;
    for (const Permutation& u : all_permutations(h.size())) {
        Permutation v = u * wh_inv;
        if (u.length() + v.length() == target) out.push_back({u, std::move(v)});
    }
    std::stable_sort(out.begin(), out.end(), [](const ATPair& a, const ATPair& b) {
        if (a.u.length() != b.u.length()) return a.u.length() < b.u.length();
        return a.u < b.u;
    });
    return out;
}

std::vector<DecompositionTerm> hess_face_terms(const HessenbergFunction& h, unsigned threads) {
    const int n = h.size();
    std::vector<DecompositionTerm> out;
    for (const ATPair& pair : at_pairs(h)) {
        auto kogan = enumerate_reduced_kogan(n, pair.u, threads);
        auto dual = enumerate_reduced_dual_kogan(n, pair.v, threads);
        std::vector<DecompositionTerm> block;
        for (const FaceDiagram& f : kogan)
            for (const FaceDiagram& g : dual) block.push_back({pair, f, g, intersect(f, g)});
        std::stable_sort(block.begin(), block.end(),
                         [](const DecompositionTerm& a, const DecompositionTerm& b) { return a.face < b.face; });
        for (auto& t : block) out.push_back(std::move(t));
    }
    return out;
}

std::vector<FaceDiagram> hess_face_decomposition(const HessenbergFunction& h, unsigned threads) {
    std::vector<FaceDiagram> out;
    for (auto& t : hess_face_terms(h, threads)) out.push_back(std::move(t.face));
    return out;
}

Polynomial hess_volume_faces(const HessenbergFunction& h, unsigned threads) {
    auto terms = hess_face_terms(h, threads);
    std::vector<Polynomial> vols(terms.size(), Polynomial(Basis::Alpha, h.size()));
    parallel_for(terms.size(), threads, [&](std::size_t k) { vols[k] = face_volume(terms[k].face); });
    Polynomial total(Basis::Alpha, h.size());
    for (const auto& v : vols) total += v;
    return total;
}

Polynomial hess_volume_derivative(const HessenbergFunction& h) {
    return to_alpha_basis(apply_operator_product(gz_volume_closed_form(h.size()), uncolored_pairs(h)));
}

SchubertExpansion hess_class_schubert(const HessenbergFunction& h, unsigned threads) {
    const int n = h.size();
    const Permutation w0 = Permutation::longest(n);
    auto pairs = at_pairs(h);
    std::vector<Polynomial> products(pairs.size(), Polynomial(Basis::Chern, n));
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        products[k] = schubert_polynomial(pairs[k].u) * schubert_polynomial(w0 * pairs[k].v * w0);
    });
    Polynomial total(Basis::Chern, n);
    for (const auto& p : products) total += p;
    return expand_in_schubert_basis(total, threads);
}

Polynomial hess_volume_schubert(const HessenbergFunction& h, unsigned threads) {
    return to_alpha_basis(vol_lambda_of_class(hess_class_schubert(h, threads)));
}

PositivityReport positivity_report(const HessenbergFunction& h, unsigned threads) {
    const int n = h.size();
    const Permutation w0 = Permutation::longest(n);
    const int dim = hess_dimension(h);
    SchubertExpansion cls = hess_class_schubert(h, threads);
    PositivityReport report;
    bool first = true;
    for (const Permutation& w : all_permutations(n)) {
        if (w.length() != dim) continue;
        Permutation idx = w0 * w;
        Rational a = cls.coefficient(idx);
        report.entries.push_back({w, idx, a});
        if (first || a < report.min_coefficient) report.min_coefficient = a;
        first = false;
    }
    report.strictly_positive = !report.entries.empty() && report.min_coefficient >= 1;
    return report;
}

}  // namespace gzhess
