#pragma once

#include "wreath/system.hpp"

namespace wreath {

// Composition convention, fixed globally: in u = g.h the element g acts
// FIRST. Accordingly the root of g.h is sigma_h o sigma_g and the section
// of g.h at eps is g_eps . h_{sigma_g(eps)}; the inverse of g has root
// sigma_g^-1 and section (g_{sigma_g^-1(eps)})^-1 at eps.

/// Wreath recursion of an arbitrary word: root permutation and d freely
/// reduced sections. Symbols are never unfolded eagerly, so recursive
/// definitions like g = [g.a, g] terminate by construction.
WreathDecomposition expand(const RecursionSystem& sys, const GroupWord& u);

/// Image of a vertex word under the element u; same length, one expansion
/// per consumed letter.
VertexWord act(const RecursionSystem& sys, const GroupWord& u, const VertexWord& w);

/// The section (renormalization) of u at vertex v, freely reduced.
/// Satisfies section(section(u, v), v') = section(u, v + v').
GroupWord section(const RecursionSystem& sys, const GroupWord& u, const VertexWord& v);

} // namespace wreath
