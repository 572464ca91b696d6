#include "qpseudo/contour.hpp"

#include <array>
#include <cstdint>

#include "qpseudo/error.hpp"

namespace qps {

namespace {

constexpr std::int64_t kNone = -1;

struct EdgeGraph {
  std::vector<Point> pos;
  std::vector<std::array<std::int64_t, 2>> nb;

  explicit EdgeGraph(std::size_t edges) : pos(edges), nb(edges, {kNone, kNone}) {}

  void link(std::int64_t a, std::int64_t b) {
    attach(a, b);
    attach(b, a);
  }
  int degree(std::size_t e) const { return (nb[e][0] != kNone) + (nb[e][1] != kNone); }

 private:
  void attach(std::int64_t from, std::int64_t to) {
    auto& slots = nb[static_cast<std::size_t>(from)];
    (slots[0] == kNone ? slots[0] : slots[1]) = to;
  }
};

}  // namespace

ContourSet contour_extract(const ScalarField& field, double level) {
  if (!(level > 0.0)) throw DomainError("contour_extract: level must be positive");
  const GridSpec& s = field.spec;
  const std::size_t nx = s.nx, ny = s.ny;
  ContourSet out{level, s, {}};

  // Edge ids: 2*node for the edge to the right neighbour, 2*node+1 for the
  // edge to the upper neighbour.
  const auto h_edge = [&](std::size_t ix, std::size_t iy) { return static_cast<std::int64_t>(2 * (iy * nx + ix)); };
  const auto v_edge = [&](std::size_t ix, std::size_t iy) {
    return static_cast<std::int64_t>(2 * (iy * nx + ix) + 1);
  };

  EdgeGraph g(2 * nx * ny);
  const auto crossing = [&](std::int64_t id, std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by) {
    const double va = field.at(ax, ay), vb = field.at(bx, by);
    const double t = (level - va) / (vb - va);
    g.pos[static_cast<std::size_t>(id)] = {s.x(ax) + t * (s.x(bx) - s.x(ax)), s.y(ay) + t * (s.y(by) - s.y(ay))};
  };

  for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
      const double v[4] = {field.at(ix, iy), field.at(ix + 1, iy), field.at(ix + 1, iy + 1), field.at(ix, iy + 1)};
      int mask = 0;
      for (int c = 0; c < 4; ++c)
        if (v[c] < level) mask |= 1 << c;
      if (mask == 0 || mask == 15) continue;

      // bottom, right, top, left
      const std::int64_t e[4] = {h_edge(ix, iy), v_edge(ix + 1, iy), h_edge(ix, iy + 1), v_edge(ix, iy)};
      const bool in[4] = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
      if (in[0] != in[1]) crossing(e[0], ix, iy, ix + 1, iy);
      if (in[1] != in[2]) crossing(e[1], ix + 1, iy, ix + 1, iy + 1);
      if (in[3] != in[2]) crossing(e[2], ix, iy + 1, ix + 1, iy + 1);
      if (in[0] != in[3]) crossing(e[3], ix, iy, ix, iy + 1);

      if (mask == 5 || mask == 10) {
        const bool center_in = 0.25 * (v[0] + v[1] + v[2] + v[3]) < level;
        // Cut off the two corners that are not joined through the centre.
        const bool cut_odd = (mask == 5) == center_in;  // corners 1 and 3
        if (cut_odd) {
          g.link(e[0], e[1]);
          g.link(e[2], e[3]);
        } else {
          g.link(e[3], e[0]);
          g.link(e[1], e[2]);
        }
        continue;
      }
      std::int64_t ends[2];
      int k = 0;
      for (int side = 0; side < 4; ++side) {
        const bool a = in[side], b = in[(side + 1) % 4];
        if (a != b) ends[k++] = e[side];
      }
      g.link(ends[0], ends[1]);
    }
  }

  std::vector<char> used(g.nb.size(), 0);
  const auto trace = [&](std::size_t start) {
    Polyline line;
    std::int64_t prev = kNone;
    std::int64_t cur = static_cast<std::int64_t>(start);
    while (cur != kNone && !used[static_cast<std::size_t>(cur)]) {
      const auto idx = static_cast<std::size_t>(cur);
      used[idx] = 1;
      line.points.push_back(g.pos[idx]);
      const auto& nb = g.nb[idx];
      std::int64_t next = nb[0] != prev ? nb[0] : nb[1];
      if (nb[0] == nb[1]) next = nb[0];  // two-segment loop
      prev = cur;
      cur = next;
    }
    if (cur == static_cast<std::int64_t>(start) && line.points.size() > 2) {
      line.points.push_back(line.points.front());
      line.closed = true;
    }
    return line;
  };

  // Open chains first (they start at degree-1 crossings on the border), then loops.
  for (std::size_t e = 0; e < g.nb.size(); ++e)
    if (!used[e] && g.degree(e) == 1) out.polylines.push_back(trace(e));
  for (std::size_t e = 0; e < g.nb.size(); ++e)
    if (!used[e] && g.degree(e) == 2) out.polylines.push_back(trace(e));
  return out;
}

}  // namespace qps
