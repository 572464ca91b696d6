#include "qpseudo/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "qpseudo/error.hpp"
#include "qpseudo/spectral.hpp"

namespace qps {

void GridSpec::validate() const {
  if (!(x_min < x_max)) throw DomainError("grid: x_min must be < x_max");
  if (!(0.0 <= y_min && y_min < y_max)) throw DomainError("grid: need 0 <= y_min < y_max");
  if (nx < 2 || ny < 2) throw DomainError("grid: nx and ny must be >= 2");
}

GridSpec auto_box(const QMatrix& a, double eps, std::size_t nx, std::size_t ny) {
  if (!(eps > 0.0)) throw DomainError("auto_box: eps must be positive");
  const double r = operator_norm(a) + std::sqrt(eps) + 0.1;
  return {-r, r, 0.0, r, nx, ny};
}

double ScalarField::min() const { return *std::min_element(values.begin(), values.end()); }
double ScalarField::max() const { return *std::max_element(values.begin(), values.end()); }

ScalarField grid_scan(const QMatrix& a, const GridSpec& spec, unsigned threads) {
  spec.validate();
  ScalarField field{spec, std::vector<double>(spec.nx * spec.ny)};

  struct Failure {
    std::size_t ix, iy;
    std::string what;
  };
  std::vector<Failure> failures;
  std::mutex failures_mutex;
  std::atomic<std::size_t> next_row{0};

  const auto worker = [&] {
    for (std::size_t iy = next_row++; iy < spec.ny; iy = next_row++) {
      const double y = spec.y(iy);
      for (std::size_t ix = 0; ix < spec.nx; ++ix) {
        try {
          field.values[iy * spec.nx + ix] = smin_at(a, SimilarityClass(spec.x(ix), y));
        } catch (const std::exception& e) {
          std::lock_guard lock(failures_mutex);
          failures.push_back({ix, iy, e.what()});
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.ny));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (!failures.empty()) {
    std::sort(failures.begin(), failures.end(),
              [](const Failure& l, const Failure& r) { return l.iy != r.iy ? l.iy < r.iy : l.ix < r.ix; });
    std::ostringstream msg;
    msg << "grid_scan: " << failures.size() << " node(s) failed";
    for (std::size_t i = 0; i < std::min<std::size_t>(failures.size(), 5); ++i) {
      const auto& f = failures[i];
      msg << "; (" << spec.x(f.ix) << ", " << spec.y(f.iy) << "): " << f.what;
    }
    throw std::runtime_error(msg.str());
  }
  return field;
}

ScalarField reflect_to_full_slice(const ScalarField& upper) {
  const GridSpec& s = upper.spec;
  if (s.y_min != 0.0) throw DomainError("reflect_to_full_slice: field must start on the real axis (y_min = 0)");
  GridSpec full = s;
  full.y_min = -s.y_max;
  full.ny = 2 * s.ny - 1;

  ScalarField out{full, std::vector<double>(full.nx * full.ny)};
  for (std::size_t iy = 0; iy < full.ny; ++iy) {
    const std::size_t src = iy < s.ny ? s.ny - 1 - iy : iy - (s.ny - 1);
    std::copy_n(upper.values.begin() + static_cast<std::ptrdiff_t>(src * s.nx), s.nx,
                out.values.begin() + static_cast<std::ptrdiff_t>(iy * s.nx));
  }
  return out;
}

std::size_t connected_components(const ScalarField& field, double level) {
  const std::size_t nx = field.spec.nx;
  const std::size_t ny = field.spec.ny;
  std::vector<char> seen(nx * ny, 0);
  std::vector<std::size_t> stack;
  std::size_t count = 0;

  for (std::size_t start = 0; start < nx * ny; ++start) {
    if (seen[start] || field.values[start] > level) continue;
    ++count;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      const std::size_t ix = node % nx;
      const std::size_t iy = node / nx;
      const auto visit = [&](std::size_t nb) {
        if (!seen[nb] && field.values[nb] <= level) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
      };
      if (ix > 0) visit(node - 1);
      if (ix + 1 < nx) visit(node + 1);
      if (iy > 0) visit(node - nx);
      if (iy + 1 < ny) visit(node + nx);
    }
  }
  return count;
}

}  // namespace qps
