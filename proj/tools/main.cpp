// qpseudo: S-spectra and pseudo S-spectra of quaternionic matrices.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpseudo/contour.hpp"
#include "qpseudo/error.hpp"
#include "qpseudo/grid.hpp"
#include "qpseudo/io.hpp"
#include "qpseudo/named.hpp"
#include "qpseudo/spectral.hpp"
#include "qpseudo/verify.hpp"

namespace {

using namespace qps;
using nlohmann::json;

struct RunConfig {
  std::string matrix;
  double eps = 0.0;
  std::vector<double> box;
  std::vector<std::size_t> res;
  std::string format;
  std::uint64_t seed = kDefaultSeed;
  std::string only;
  std::string out;
  unsigned threads = 0;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void require_eps(const RunConfig& cfg) {
  if (!(cfg.eps > 0.0)) throw DomainError("--eps must be positive");
}

std::pair<std::size_t, std::size_t> resolution(const RunConfig& cfg) {
  if (cfg.res.empty()) return {401, 201};
  if (cfg.res.size() != 2) throw DomainError("--res expects nx,ny");
  return {cfg.res[0], cfg.res[1]};
}

GridSpec grid_for(const RunConfig& cfg, const QMatrix& a) {
  const auto [nx, ny] = resolution(cfg);
  GridSpec g;
  if (cfg.box.empty()) {
    require_eps(cfg);
    g = auto_box(a, cfg.eps, nx, ny);
  } else {
    if (cfg.box.size() != 4) throw DomainError("--box expects xmin,xmax,ymin,ymax");
    g = {cfg.box[0], cfg.box[1], cfg.box[2], cfg.box[3], nx, ny};
  }
  g.validate();
  return g;
}

int cmd_spectrum(const RunConfig& cfg) {
  const SSpectrum s = s_spectrum(resolve_matrix(cfg.matrix));
  emit(cfg.out, cfg.format == "json" ? spectrum_to_json(s) : spectrum_to_text(s));
  return 0;
}

int cmd_pseudo_grid(const RunConfig& cfg) {
  const QMatrix a = resolve_matrix(cfg.matrix);
  const ScalarField f = grid_scan(a, grid_for(cfg, a), cfg.threads);
  if (cfg.format == "svg") throw DomainError("pseudo-grid supports --format csv|json");
  emit(cfg.out, cfg.format == "json" ? field_to_json(f) : field_to_csv(f));
  return 0;
}

int cmd_contour(const RunConfig& cfg) {
  require_eps(cfg);
  const QMatrix a = resolve_matrix(cfg.matrix);
  ScalarField f = grid_scan(a, grid_for(cfg, a), cfg.threads);
  if (f.spec.y_min == 0.0) f = reflect_to_full_slice(f);
  const ContourSet c = contour_extract(f, cfg.eps);
  if (cfg.format == "csv") throw DomainError("contour supports --format json|svg");
  emit(cfg.out, cfg.format == "svg" ? contour_to_svg(c) : contour_to_json(c));
  return 0;
}

std::optional<Quaternion> scalar_multiple_of_identity(const QMatrix& a) {
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c)
      if (r == c ? !(a(r, c) == a(0, 0)) : !(a(r, c) == Quaternion())) return std::nullopt;
  return a(0, 0);
}

int cmd_classify(const RunConfig& cfg) {
  require_eps(cfg);
  const QMatrix a = resolve_matrix(cfg.matrix);
  json out{{"eps", cfg.eps}};
  if (const auto q = scalar_multiple_of_identity(a)) {
    const RealLineClassification cls = real_line_classifier(*q, cfg.eps);
    out["model"] = "left-multiplication";
    out["q"] = {q->w, q->x, q->y, q->z};
    out["shape"] = cls.shape == RealLineShape::empty ? "empty" : "nonempty-connected";
    out["witness"] = cls.witness ? json(*cls.witness) : json(nullptr);
  } else {
    // Sample the real axis over the exclusion radius, plus the real parts of
    // the spectrum (members can be isolated points there), and collect runs.
    const std::size_t n = resolution(cfg).first * 5;
    const double r = operator_norm(a) + std::sqrt(cfg.eps);
    std::vector<double> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(-r + 2.0 * r * static_cast<double>(i) / static_cast<double>(n - 1));
    for (const auto& c : s_spectrum(a).classes) xs.push_back(c.re());
    std::sort(xs.begin(), xs.end());
    json segments = json::array();
    std::optional<double> start;
    double prev = -r;
    for (double x : xs) {
      const bool member = pseudo_membership(a, x, cfg.eps);
      if (member && !start) start = x;
      if (!member && start) {
        segments.push_back({*start, prev});
        start.reset();
      }
      prev = x;
    }
    if (start) segments.push_back({*start, prev});
    out["model"] = "sampled";
    out["segments"] = segments;
    out["shape"] = segments.empty() ? "empty" : segments.size() == 1 ? "nonempty-connected" : "nonempty-disconnected";
  }
  emit(cfg.out, out.dump(2));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  std::optional<QMatrix> m;
  if (!cfg.matrix.empty()) m = resolve_matrix(cfg.matrix);
  std::vector<CheckReport> reports;
  if (!cfg.only.empty()) {
    reports = run_check(cfg.only, cfg.seed, m);
  } else {
    if (m) throw DomainError("--matrix requires --only <check>");
    reports = run_suite(cfg.seed);
  }
  emit(cfg.out, reports_to_json(reports));
  bool ok = true;
  for (const auto& r : reports) {
    if (r.passed) continue;
    ok = false;
    std::cerr << "FAIL " << r.name << ": residual " << r.max_residual << " > " << r.tolerance;
    if (r.witness) {
      std::cerr << " at q = " << to_string(r.witness->q) << ", values";
      for (double v : r.witness->values) std::cerr << ' ' << format_double(v);
    }
    std::cerr << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_examples(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out.empty() ? fs::path("examples_out") : fs::path(cfg.out);
  fs::create_directories(dir);
  const std::string ext = cfg.format == "json" ? "json" : "csv";
  std::vector<std::string> written;
  const auto put = [&](const std::string& name, const std::string& text) {
    emit((dir / name).string(), text);
    written.push_back((dir / name).string());
  };

  const auto [nx, ny] = resolution(cfg);
  const EightShapeResult eight = reproduce_eight_shape(nx, ny);
  const char* tags[] = {"A", "B", "C"};
  for (std::size_t i = 0; i < eight.figures.size(); ++i)
    put(std::string("eight_shape_") + tags[i] + "." + ext,
        ext == "json" ? field_to_json(eight.figures[i]) : field_to_csv(eight.figures[i]));

  json proj{{"centers", {0.0, 1.0}}, {"regions", json::array()}};
  for (double eps : {0.04, 0.25, 1.0})
    proj["regions"].push_back({{"eps", eps}, {"radius", std::sqrt(eps)}});
  put("projection_region.json", proj.dump(2));

  {
    const double eps = 1.1;
    std::string csv = "q0,modulus,y\n";
    const double r = 1.0 + std::sqrt(eps) + 0.5;
    for (int i = 0; i <= 400; ++i) {
      const double q0 = -r + 2.0 * r * i / 400.0;
      const double bound = std::pow(eps * (eps + 2.0 * std::fabs(q0)), 0.25);
      if (bound < std::fabs(q0)) continue;
      csv += format_double(q0) + "," + format_double(bound) + "," +
             format_double(std::sqrt(bound * bound - q0 * q0)) + "\n";
    }
    put("nilpotent_boundary.csv", csv);
  }
  {
    const complex l1(1.0, 0.5), l2(2.0, 0.0);
    const Quaternion q(1.5, 0.5);
    std::string csv = "w,closed_form,svd\n";
    for (int i = 0; i <= 60; ++i) {
      const double w = 3.0 * i / 60.0;
      const QMatrix a{{Quaternion::from_complex(l1), w}, {0.0, Quaternion::from_complex(l2)}};
      csv += format_double(w) + "," + format_double(upper_triangular_smin(l1, l2, w, q)) + "," +
             format_double(smin_at(a, q)) + "\n";
    }
    put("triangular_family.csv", csv);
  }
  {
    const QMatrix a = disc_normal();
    const double eps = 0.25;
    std::string csv = "x,smin,member\n";
    for (int i = 0; i <= 400; ++i) {
      const double x = 4.0 * i / 400.0;
      const double s = smin_at(a, x);
      csv += format_double(x) + "," + format_double(s) + "," + (pseudo_membership(a, x, eps) ? "1" : "0") + "\n";
    }
    put("disconnected_real.csv", csv);
  }

  for (const auto& w : written) std::cout << w << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-spectra and pseudo S-spectra of quaternionic matrices"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto matrix_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--matrix", cfg.matrix,
                              "named matrix (nilpotent2, proj2, diagjk, disc-normal, hypo12, leftmult:<q>:<n>), "
                              "JSON file or inline JSON");
    if (required) o->required();
  };
  const auto grid_opts = [&](CLI::App* sub) {
    sub->add_option("--box", cfg.box, "xmin,xmax,ymin,ymax")->delimiter(',')->expected(4);
    sub->add_option("--res", cfg.res, "nx,ny")->delimiter(',')->expected(2);
    sub->add_option("--threads", cfg.threads, "grid workers (0 = all cores)");
  };
  const auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "S-spectrum as (re, im_mag) classes");
  matrix_opt(spectrum, true);
  common(spectrum, {"text", "json"});

  auto* grid = app.add_subcommand("pseudo-grid", "s_min of Q_z(A) on a grid of the upper half-plane");
  matrix_opt(grid, true);
  grid->add_option("--eps", cfg.eps, "level used for the automatic box");
  grid_opts(grid);
  common(grid, {"csv", "json"});

  auto* contour = app.add_subcommand("contour", "boundary of the eps-pseudo S-spectrum on the full slice");
  matrix_opt(contour, true);
  contour->add_option("--eps", cfg.eps)->required();
  grid_opts(contour);
  common(contour, {"json", "svg"});

  auto* classify = app.add_subcommand("classify", "shape of the real-axis slice");
  matrix_opt(classify, true);
  classify->add_option("--eps", cfg.eps)->required();
  classify->add_option("--res", cfg.res, "nx,ny (5 nx samples on the axis)")->delimiter(',')->expected(2);
  classify->add_option("--out", cfg.out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  matrix_opt(verify, false);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--only", cfg.only, "single check family")->check([](const std::string& s) {
    return is_check_name(s) ? std::string() : "unknown check '" + s + "'";
  });
  verify->add_option("--out", cfg.out, "output path (default stdout)");

  auto* examples = app.add_subcommand("examples", "write every worked example's data files");
  examples->add_option("--out", cfg.out, "output directory (default examples_out)");
  examples->add_option("--res", cfg.res, "nx,ny for the figure grids")->delimiter(',')->expected(2);
  examples->add_option("--format", cfg.format, "grid file format")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (grid->parsed()) return cmd_pseudo_grid(cfg);
    if (contour->parsed()) return cmd_contour(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (examples->parsed()) return cmd_examples(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
