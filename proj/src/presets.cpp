#include "boxcover/presets.hpp"

#include <array>

namespace boxcover {

MultiGraph figure_eight() { return MultiGraph(1, {{0, 0}, {0, 0}}); }

ExampleH example_h() {
  using H = ExampleH;
  ExampleH h;
  h.graph = MultiGraph(6, {
                              {H::x, H::y},  // e1
                              {H::y, H::z},  // e2
                              {H::y, H::v},  // e3
                              {H::x, H::u},  // e4
                              {H::v, H::w},  // e5
                              {H::u, H::y},  // f
                              {H::w, H::z},  // g
                          });
  const std::array<EdgeId, 5> tree{H::e1, H::e2, H::e3, H::e4, H::e5};
  h.spanning = spanning_from_tree(h.graph, tree);
  return h;
}

}  // namespace boxcover
