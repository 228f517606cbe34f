#pragma once

#include "gzhess/face.hpp"
#include "gzhess/permutation.hpp"

#include <map>
#include <vector>

namespace gzhess {

struct KoganWord {
    std::vector<int> word;
    Permutation w;
    bool reduced = false;
};

// H(i,j) reads as s_j; edges are read band by band (band j-i, outermost
// first), top to bottom within a band.
KoganWord kogan_word(const FaceDiagram& f);
// V(i,j) reads as s_{n-i}; bands j-i-1 outermost first, bottom to top.
KoganWord dual_kogan_word(const FaceDiagram& f);

std::vector<FaceDiagram> enumerate_reduced_kogan(int n, const Permutation& u, unsigned threads = 1);
std::vector<FaceDiagram> enumerate_reduced_dual_kogan(int n, const Permutation& v, unsigned threads = 1);

// Every reduced (dual) Kogan face of size n grouped by its permutation, each
// group sorted by edge set. Computed once per n and cached.
const std::map<Permutation, std::vector<FaceDiagram>>& reduced_kogan_faces(int n, unsigned threads = 1);
const std::map<Permutation, std::vector<FaceDiagram>>& reduced_dual_kogan_faces(int n, unsigned threads = 1);

}  // namespace gzhess
