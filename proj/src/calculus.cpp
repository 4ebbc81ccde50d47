#include "wreath/calculus.hpp"

namespace wreath {

namespace {

void check_factors(const RecursionSystem& sys, const GroupWord& u) {
  for (const Factor& f : u.factors())
    if (f.symbol >= sys.generator_count())
      throw Error("undefined symbol id " + std::to_string(f.symbol) + " in word");
}

} // namespace

WreathDecomposition expand(const RecursionSystem& sys, const GroupWord& u) {
  check_factors(sys, u);
  const std::uint32_t d = sys.degree();

  // root[eps] tracked as a plain image table; sections accumulated with
  // reducing appends.
  std::vector<Letter> root(d);
  for (std::uint32_t i = 0; i < d; ++i)
    root[i] = i;
  std::vector<GroupWord> sections(d);

  for (const Factor& f : u.factors()) {
    const GeneratorDef& g = sys.def(f.symbol);
    if (!f.inverted) {
      for (std::uint32_t eps = 0; eps < d; ++eps) {
        sections[eps].append(g.sections[root[eps]]);
        root[eps] = g.root(root[eps]);
      }
    } else {
      const Permutation inv = g.root.inverse();
      for (std::uint32_t eps = 0; eps < d; ++eps) {
        root[eps] = inv(root[eps]);
        sections[eps].append_inverse(g.sections[root[eps]]);
      }
    }
  }
  return WreathDecomposition{Permutation(std::move(root)), std::move(sections)};
}

VertexWord act(const RecursionSystem& sys, const GroupWord& u, const VertexWord& w) {
  w.validate(sys.degree());
  VertexWord out;
  GroupWord cur = u;
  for (std::size_t i = 0; i < w.size(); ++i) {
    WreathDecomposition dec = expand(sys, cur);
    out.push_back(dec.root(w[i]));
    cur = std::move(dec.sections[w[i]]);
  }
  return out;
}

GroupWord section(const RecursionSystem& sys, const GroupWord& u, const VertexWord& v) {
  v.validate(sys.degree());
  GroupWord cur = u;
  for (std::size_t i = 0; i < v.size(); ++i) {
    WreathDecomposition dec = expand(sys, cur);
    cur = std::move(dec.sections[v[i]]);
  }
  return cur;
}

} // namespace wreath
