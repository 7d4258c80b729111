#include "cfrac/svg.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "cfrac/audits.hpp"
#include "cfrac/errors.hpp"

namespace cfrac {

namespace {

constexpr double kSize = 600;
constexpr double kScale = 250;
const char* kLevelColor[] = {"#000000", "#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad"};

const char* level_color(std::size_t j) { return kLevelColor[std::min<std::size_t>(j, 4)]; }

struct Projector {
  std::size_t n;
  double px(const DVector& x) const {
    if (n == 3) return kSize / 2 + kScale * (0.866 * x[0] - 0.5 * x[1]);
    return kSize / 2 + kScale * x[0];
  }
  double py(const DVector& x) const {
    double y = n == 1 ? 0 : n == 3 ? 0.35 * x[0] + 0.6 * x[1] + 0.72 * x[2] : x[1];
    return kSize / 2 - kScale * y;
  }
};

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
         "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Orthonormal directions of a circle piece's hull.
std::vector<DVector> hull_directions(const SpherePiece& p) {
  const std::size_t n = p.ambient();
  const QMatrix& h = p.hull();
  QMatrix A(h.rows(), n);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = h(i, j);
  QMatrix ns = h.rows() == 0 ? QMatrix::identity(n) : null_space(A);
  std::vector<DVector> out;
  for (std::size_t f = 0; f < ns.cols(); ++f) {
    DVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = ns(i, f).get_d();
    for (const auto& e : out) {
      double d = dot(v, e);
      for (std::size_t i = 0; i < n; ++i) v[i] -= d * e[i];
    }
    double len = std::sqrt(norm_sq(v));
    for (auto& x : v) x /= len;
    out.push_back(v);
  }
  return out;
}

void draw_circle_piece(std::ostringstream& os, const SpherePiece& p, const Projector& pr, const char* color) {
  auto dirs = hull_directions(p);
  const double r = p.radius();
  DVector c(p.ambient());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.center()[i].get_d();
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
  for (int k = 0; k <= 96; ++k) {
    double t = 2 * std::numbers::pi * k / 96;
    DVector x = c;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += r * (std::cos(t) * dirs[0][i] + std::sin(t) * dirs[1][i]);
    os << num(pr.px(x)) << "," << num(pr.py(x)) << " ";
  }
  os << "\"/>\n";
}

void dot_at(std::ostringstream& os, const DVector& x, const Projector& pr, const char* color, double r) {
  os << "<circle cx=\"" << num(pr.px(x)) << "\" cy=\"" << num(pr.py(x)) << "\" r=\"" << num(r) << "\" fill=\""
     << color << "\"/>\n";
}

}  // namespace

std::string decomposition_svg(const Decomposition& d, std::size_t max_level) {
  const std::size_t n = d.lattice.dim();
  Projector pr{n};
  std::ostringstream os;
  os << header();
  if (n == 1) {
    os << "<line x1=\"" << num(pr.px({-1})) << "\" y1=\"" << num(pr.py({0})) << "\" x2=\"" << num(pr.px({1}))
       << "\" y2=\"" << num(pr.py({0})) << "\" stroke=\"#999999\"/>\n";
  } else {
    os << "<circle cx=\"" << num(kSize / 2) << "\" cy=\"" << num(kSize / 2) << "\" r=\"" << num(kScale)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t j = 1; j < d.levels.size() && j <= max_level; ++j) {
    for (const auto& p : d.levels[j].pieces) {
      if (p.kind() == PieceKind::Sphere && p.dimension() == 1) {
        draw_circle_piece(os, p, pr, level_color(j));
        continue;
      }
      for (const auto& x : p.exact_points()) {
        DVector f(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) f[i] = x[i].to_double();
        dot_at(os, f, pr, level_color(j), 6.0 - static_cast<double>(j));
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string domain_svg(const CFAlgorithm& algo, int grid) {
  if (algo.algebra != Algebra::C) throw InvalidConfiguration("domain figures are drawn for complex algorithms only");
  if (grid < 8) throw InvalidConfiguration("grid must be at least 8");
  Projector pr{2};
  std::ostringstream os;
  os << header();
  const double cell = 2.0 / grid;
  for (int iy = 0; iy < grid; ++iy)
    for (int ix = 0; ix < grid; ++ix) {
      FloatElement x(Algebra::C, {-1 + (ix + 0.5) * cell, -1 + (iy + 0.5) * cell});
      if (!algo.domain.contains(x) || norm(x) < 1e-9) continue;
      long h = 7;
      try {
        auto st = gauss_step(x, algo);
        for (long c : st.coords) h = h * 31 + c;
      } catch (const Error&) {
        h = -1;
      }
      std::ostringstream color;
      if (h < 0) {
        color << "#000000";
      } else {
        unsigned long u = static_cast<unsigned long>(h) * 2654435761UL;
        color << "#" << std::hex << std::setw(2) << std::setfill('0') << (0x60 + (u & 0x7f)) << std::setw(2)
              << (0x60 + ((u >> 8) & 0x7f)) << std::setw(2) << (0x60 + ((u >> 16) & 0x7f));
      }
      os << "<rect x=\"" << num(pr.px({x[0] - cell / 2, 0})) << "\" y=\"" << num(pr.py({0, x[1] + cell / 2}))
         << "\" width=\"" << num(kScale * cell) << "\" height=\"" << num(kScale * cell) << "\" fill=\""
         << color.str() << "\"/>\n";
    }
  os << "<circle cx=\"" << num(kSize / 2) << "\" cy=\"" << num(kSize / 2) << "\" r=\"" << num(kScale)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  try {
    auto rep = finiteness_audit(algo.domain, *algo.order, algo.inversion);
    for (const auto& p : rep.points) dot_at(os, {p[0], p[1]}, pr, "#c0392b", 5);
    for (const auto& a : rep.arcs) {
      os << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"4\" points=\"";
      for (int k = 0; k <= 48; ++k) {
        double t = a.lo + (a.hi - a.lo) * k / 48;
        os << num(pr.px({std::cos(t), std::sin(t)})) << "," << num(pr.py({std::cos(t), std::sin(t)})) << " ";
      }
      os << "\"/>\n";
    }
  } catch (const Error&) {
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cfrac
