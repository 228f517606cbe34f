#pragma once

#include "gzhess/face.hpp"
#include "gzhess/hessenberg.hpp"
#include "gzhess/polynomial.hpp"
#include "gzhess/schubert.hpp"

#include <vector>

namespace gzhess {

// v^{-1} u = w_h with l(u) + l(v) = l(w_h).
struct ATPair {
    Permutation u;
    Permutation v;
};

// Sorted by (l(u), u).
std::vector<ATPair> at_pairs(const HessenbergFunction& h);

struct DecompositionTerm {
    ATPair pair;
    FaceDiagram kogan;
    FaceDiagram dual;
    FaceDiagram face;  // kogan and dual intersected
};

// One term per AT pair and per pair of reduced Kogan / dual Kogan faces with
// w(F) = u and w(F*) = v; sorted by (l(u), u, edge set). Empty faces are kept.
std::vector<DecompositionTerm> hess_face_terms(const HessenbergFunction& h, unsigned threads = 1);
std::vector<FaceDiagram> hess_face_decomposition(const HessenbergFunction& h, unsigned threads = 1);

// Alpha-basis volume polynomials by the three independent routes.
Polynomial hess_volume_faces(const HessenbergFunction& h, unsigned threads = 1);
Polynomial hess_volume_derivative(const HessenbergFunction& h);
Polynomial hess_volume_schubert(const HessenbergFunction& h, unsigned threads = 1);

// sum over AT pairs of S_u * S_{w0 v w0}, expanded in the Schubert basis.
SchubertExpansion hess_class_schubert(const HessenbergFunction& h, unsigned threads = 1);

struct PositivityEntry {
    Permutation w;          // l(w) = dim Hess(S,h)
    Permutation w0w;        // index of the Schubert class
    Rational coefficient;   // a_w
};

struct PositivityReport {
    std::vector<PositivityEntry> entries;
    Rational min_coefficient = 0;
    bool strictly_positive = false;  // every a_w >= 1
};

PositivityReport positivity_report(const HessenbergFunction& h, unsigned threads = 1);

}  // namespace gzhess
