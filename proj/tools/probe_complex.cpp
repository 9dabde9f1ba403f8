#include <iostream>

#include "ncpw/complex.hpp"
#include "ncpw/ncp.hpp"

using namespace ncpw;

static void dump(const char* tag, const CellComplex& k) {
  std::cout << "== " << tag << " dim " << k.dim() << " chi "
            << k.euler_characteristic() << " cells:";
  for (int d = 0; d <= k.dim(); ++d) std::cout << " " << k.cell_count(d);
  std::cout << "\n";
  for (int d = 0; d <= k.dim() && d <= 2; ++d) {
    std::cout << "  dim " << d << ":";
    for (const auto& c : k.cells(d)) std::cout << " " << c.descriptor;
    std::cout << "\n";
  }
  auto h = homology(k);
  std::cout << homology_text(h) << "\n";
  for (const auto& n : k.notes()) std::cout << "  note: " << n << "\n";
}

int main() {
  {
    auto sys = CoxeterSystem::from_name("S3");
    auto p = build_interval(sys, sys->coxeter_element(), {});
    auto k = build_interval_complex(p);
    dump("K S3", k);
    auto x = build_salvetti_subcomplex(sys, sys->coxeter_element(), k);
    dump("X' S3", x);
    auto census = spherical_subsets(sys);
    std::cout << "census S3:";
    for (auto& s : census) std::cout << " [" << s.type << "]";
    std::cout << "\n";
  }
  for (int depth : {2, 3, 5}) {
    auto sys = CoxeterSystem::from_name("affine A1");
    WindowSpec ws;
    ws.depth = depth;
    auto p = build_interval(sys, sys->coxeter_element(), ws);
    auto k = build_interval_complex(p);
    dump(("K affA1 depth " + std::to_string(depth)).c_str(), k);
    auto x = build_salvetti_subcomplex(sys, sys->coxeter_element(), k);
    dump("X' affA1", x);
  }
  {
    auto sys = CoxeterSystem::from_name("affine A2");
    WindowSpec ws;
    ws.depth = 4;
    auto p = build_interval(sys, sys->coxeter_element(), ws);
    auto k = build_interval_complex(p);
    dump("K affA2 depth 4", k);
    auto x = build_salvetti_subcomplex(sys, sys->coxeter_element(), k);
    dump("X' affA2", x);
    auto census = spherical_subsets(sys);
    std::cout << "census affA2 (" << census.size() << "):";
    for (auto& s : census) std::cout << " [" << s.type << "]";
    std::cout << "\n";
  }
  {
    auto sys = CoxeterSystem::from_name("affine C2");
    auto census = spherical_subsets(sys);
    std::cout << "census affC2 (" << census.size() << "):";
    for (auto& s : census) std::cout << " [" << s.type << "]";
    std::cout << "\n";
  }
  {
    auto sys = CoxeterSystem::from_name("S4");
    auto p = build_interval(sys, sys->coxeter_element(), {});
    auto k = build_interval_complex(p);
    dump("K S4", k);
  }
  {
    auto sys = CoxeterSystem::from_name("B3");
    auto p = build_interval(sys, sys->coxeter_element(), {});
    auto k = build_interval_complex(p);
    dump("K B3", k);
    auto census = spherical_subsets(sys);
    std::cout << "census B3 (" << census.size() << "):";
    for (auto& s : census) std::cout << " [" << s.type << "]";
    std::cout << "\n";
  }
  return 0;
}
