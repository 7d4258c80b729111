#include "cfrac/domain.hpp"

#include <cmath>

#include "cfrac/errors.hpp"
#include "cfrac/serialize.hpp"

namespace cfrac {

const char* domain_kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::Dirichlet: return "dirichlet";
    case DomainKind::Box: return "box";
    case DomainKind::Chevron: return "chevron";
  }
  return "?";
}

Domain Domain::dirichlet(std::shared_ptr<const Order> order) {
  Domain d;
  d.kind_ = DomainKind::Dirichlet;
  d.algebra_ = order->algebra();
  d.order_ = std::move(order);
  return d;
}

Domain Domain::box(Algebra algebra, std::vector<ExactElement> frame, std::vector<Interval> bounds) {
  if (frame.size() != bounds.size() || frame.empty() || frame.size() > dimension(algebra))
    throw InvalidConfiguration("box domain needs one interval per frame vector");
  Domain d;
  d.kind_ = DomainKind::Box;
  d.algebra_ = algebra;
  d.frame_matrix_ = QMatrix(dimension(algebra), frame.size());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (frame[j].algebra() != algebra) throw AlgebraMismatch("box frame vector in wrong algebra");
    d.frame_matrix_.set_column(j, frame[j].coeffs());
  }
  if (rank(d.frame_matrix_) != frame.size()) throw InvalidConfiguration("box frame is linearly dependent");
  for (const auto& b : bounds)
    if (!(b.lo < b.hi)) throw InvalidConfiguration("box interval is empty");
  d.frame_float_ = to_double(d.frame_matrix_);
  d.frame_ = std::move(frame);
  d.bounds_ = std::move(bounds);
  return d;
}

Domain Domain::unit_box(Algebra algebra, std::size_t span_dim, const Surd& lo, const Surd& hi) {
  std::vector<ExactElement> frame;
  std::vector<Interval> bounds;
  for (std::size_t j = 0; j < span_dim; ++j) {
    frame.push_back(ExactElement::basis(algebra, j));
    bounds.push_back({lo, hi});
  }
  return box(algebra, std::move(frame), std::move(bounds));
}

Domain Domain::chevron() {
  Domain d;
  d.kind_ = DomainKind::Chevron;
  d.algebra_ = Algebra::C;
  return d;
}

namespace {

bool in_interval(const Rational& t, const Interval& iv) {
  Surd s(t);
  return (s - iv.lo).sign() >= 0 && (s - iv.hi).sign() < 0;
}

bool in_interval(double t, const Interval& iv) { return t >= iv.lo.to_double() && t < iv.hi.to_double(); }

}  // namespace

bool Domain::contains(const ExactElement& x) const {
  if (x.algebra() != algebra_) throw DimensionMismatch("point and domain live in different algebras");
  switch (kind_) {
    case DomainKind::Dirichlet: {
      auto p = nearest(*order_, x);
      for (long c : p.coords)
        if (c != 0) return false;
      return true;
    }
    case DomainKind::Box: {
      auto s = solve(frame_matrix_, x.coeffs());
      if (!s) return false;
      for (std::size_t j = 0; j < bounds_.size(); ++j)
        if (!in_interval(s->x[j], bounds_[j])) return false;
      return true;
    }
    case DomainKind::Chevron: {
      const Rational& a = x[0];
      const Rational& b = x[1];
      if (b < Rational(-1, 2) || b >= Rational(1, 2)) return false;
      if (a * a + b * b >= 1) return false;
      Rational am = a - 1;
      return am * am + b * b >= 1;
    }
  }
  return false;
}

bool Domain::contains(const FloatElement& x) const {
  if (x.algebra() != algebra_) throw DimensionMismatch("point and domain live in different algebras");
  switch (kind_) {
    case DomainKind::Dirichlet: {
      auto p = nearest(*order_, x);
      for (long c : p.coords)
        if (c != 0) return false;
      return true;
    }
    case DomainKind::Box: {
      std::vector<double> t = frame_float_.cols() == frame_float_.rows()
                                  ? (*inverse(frame_float_)) * x.coeffs()
                                  : solve_least_squares(frame_float_, x.coeffs());
      std::vector<double> back = frame_float_ * t;
      double res = 0;
      for (std::size_t i = 0; i < back.size(); ++i) res += (back[i] - x[i]) * (back[i] - x[i]);
      if (res > 1e-24 * (1 + norm_sq(x))) return false;
      for (std::size_t j = 0; j < bounds_.size(); ++j)
        if (!in_interval(t[j], bounds_[j])) return false;
      return true;
    }
    case DomainKind::Chevron: {
      const double a = x[0], b = x[1];
      if (b < -0.5 || b >= 0.5) return false;
      if (a * a + b * b >= 1) return false;
      return (a - 1) * (a - 1) + b * b >= 1;
    }
  }
  return false;
}

std::vector<FloatElement> Domain::corners() const {
  std::vector<FloatElement> out;
  if (kind_ != DomainKind::Box) return out;
  const std::size_t m = bounds_.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<double> t(m);
    for (std::size_t j = 0; j < m; ++j) t[j] = (mask >> j & 1) ? bounds_[j].hi.to_double() : bounds_[j].lo.to_double();
    out.emplace_back(algebra_, frame_float_ * t);
  }
  return out;
}

double Domain::sup_norm() const {
  if (sup_cache_ >= 0) return sup_cache_;
  double s = 0;
  switch (kind_) {
    case DomainKind::Dirichlet: s = dirichlet_radius(*order_).value; break;
    case DomainKind::Box:
      for (const auto& c : corners()) s = std::max(s, norm(c));
      break;
    case DomainKind::Chevron: s = 1.0; break;
  }
  sup_cache_ = s;
  return s;
}

FloatElement Domain::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (kind_) {
    case DomainKind::Dirichlet: {
      const Order& L = *order_;
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> t(L.rank());
        for (auto& v : t) v = u(rng);
        FloatElement x(algebra_, L.float_basis() * t);
        FloatElement y = x - nearest(L, x).value;
        if (contains(y)) return y;
      }
      throw Error("could not sample the Dirichlet domain");
    }
    case DomainKind::Box: {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> t(bounds_.size());
        for (std::size_t j = 0; j < t.size(); ++j) {
          double lo = bounds_[j].lo.to_double(), hi = bounds_[j].hi.to_double();
          t[j] = lo + (hi - lo) * u(rng);
        }
        FloatElement x(algebra_, frame_float_ * t);
        if (contains(x)) return x;
      }
      throw Error("could not sample the box domain");
    }
    case DomainKind::Chevron: {
      for (int attempt = 0; attempt < 100000; ++attempt) {
        FloatElement x(Algebra::C, {u(rng), u(rng) - 0.5});
        if (contains(x)) return x;
      }
      throw Error("could not sample the chevron domain");
    }
  }
  throw Error("unknown domain kind");
}

ExactElement Domain::sample_exact(std::mt19937_64& rng, long denominator) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FloatElement x = sample(rng);
    ExactElement q(algebra_);
    if (kind_ == DomainKind::Box) {
      // Round the frame coordinates so that subspace boxes stay exact.
      std::vector<double> t = frame_float_.cols() == frame_float_.rows()
                                  ? (*inverse(frame_float_)) * x.coeffs()
                                  : solve_least_squares(frame_float_, x.coeffs());
      std::vector<Rational> tq(t.size());
      for (std::size_t j = 0; j < t.size(); ++j)
        tq[j] = make_rational(static_cast<long>(std::llround(t[j] * static_cast<double>(denominator))), denominator);
      q = ExactElement(algebra_, frame_matrix_ * tq);
    } else {
      for (std::size_t i = 0; i < x.dim(); ++i)
        q[i] = make_rational(static_cast<long>(std::llround(x[i] * static_cast<double>(denominator))), denominator);
    }
    if (contains(q)) return q;
  }
  throw Error("could not draw an exact sample from the domain");
}

std::string Domain::describe() const {
  switch (kind_) {
    case DomainKind::Dirichlet: return "dirichlet(" + order_->name() + ")";
    case DomainKind::Chevron: return "chevron";
    case DomainKind::Box: {
      std::string s = "box(";
      for (std::size_t j = 0; j < frame_.size(); ++j) {
        if (j) s += "; ";
        s += pretty(frame_[j]) + " in [" + bounds_[j].lo.to_string() + ", " + bounds_[j].hi.to_string() + ")";
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace cfrac
