#include "rs3/dot.hpp"

#include <algorithm>

namespace rs3 {

namespace {

template <typename T, typename Leq>
std::string render_hasse(std::vector<T> elems, Leq leq, const std::string& name) {
  std::sort(elems.begin(), elems.end(),
            [](const T& a, const T& b) { return canonical_less(a, b); });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  std::string out = "digraph " + name + " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < elems.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + elems[i].to_string() + "\"];\n";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j || !leq(elems[i], elems[j]) || leq(elems[j], elems[i])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < elems.size() && covered; ++k) {
        if (k == i || k == j) continue;
        if (leq(elems[i], elems[k]) && !leq(elems[k], elems[i]) && leq(elems[k], elems[j]) &&
            !leq(elems[j], elems[k]))
          covered = false;
      }
      if (covered) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string hasse_dot(const std::vector<ApproxPair>& pairs, const std::string& name) {
  return render_hasse(pairs, [](const ApproxPair& a, const ApproxPair& b) { return pair_leq(a, b); },
                      name);
}

std::string hasse_dot(const std::vector<TvFunction>& functions, const std::string& name) {
  return render_hasse(functions, [](const TvFunction& a, const TvFunction& b) { return leq(a, b); },
                      name);
}

}  // namespace rs3
