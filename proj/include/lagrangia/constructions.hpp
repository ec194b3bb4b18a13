#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lagrangia/hypergraph.hpp"

namespace lagrangia {

/// Symbolic name of a construction. Text form (used by the CLI):
///
///   K:r:p       complete r-graph on p vertices
///   M:r:t       t pairwise disjoint r-edges
///   L:r:t       linear star, t edges through vertex 1
///   T:r:m:n     balanced blowup of K_m^r on n vertices
///   F:t:l:n     the 2-graph F_{t,l}(n)
///   G:k:n       the 3-graph G_k(n), k in 0..4
///   H:p:<spec>  extension of <spec> with a core of p vertices
struct FamilySpec {
    enum class Kind { complete, matching, linear_star, turan_blowup, f_family, g_family, extension };

    Kind kind = Kind::complete;
    std::vector<int> params;
    std::shared_ptr<const FamilySpec> inner;  // extension only

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

Hypergraph construct(const FamilySpec& spec);

Hypergraph complete_graph(int r, int p);
Hypergraph matching_graph(int r, int t);
Hypergraph linear_star(int r, int t);

/// Part sizes of the balanced m-partition of n, smaller parts first.
std::vector<int> balanced_parts(int m, int n);
Hypergraph turan_graph(int r, int m, int n);

/// |T_m^r(n)|, by the elementary symmetric polynomial of the part sizes.
long long turan_count(int r, int m, int n);

/// C([2t-1-l], 2) plus all pairs {a,b} with a <= l < 2t-l <= b.
Hypergraph family_F(int t, int l, int n);

/// The five maximal left-compressed intersecting 3-graph shapes G_0..G_4 on [n].
Hypergraph family_G(int k, int n);

/// H_p^F. New core vertices take labels |V(F)|+1..p; for each uncovered
/// core pair, in lexicographic pair order, r-2 fresh vertices are appended.
/// For r = 2 the bare pair is added.
Hypergraph extension(const Hypergraph& f, int p);

}  // namespace lagrangia
