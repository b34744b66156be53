// DOT and SVG rendering of GKM graphs, optionally decorated with the
// "bouquet of arrows" picture of a class: at each vertex w with
// f(w) = c * prod beta_j, one arrow per beta_j and the scalar c beside it.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

struct Factorization {
  Rational scalar = 0;
  std::vector<Weight> factors;
  bool complete = true;    // false: `rest` is a non-constant leftover
  Polynomial rest;
};

/// Greedy factorization of f(w) into weights: divide by the down-edge labels
/// of w first, then by any other edge label at w.
inline Factorization factor_restriction(const Polynomial& value, const GkmGraph& g, std::size_t w) {
  Factorization out;
  if (value.is_zero()) return out;
  std::vector<const Weight*> candidates;
  for (const auto& nb : g.down_edges(w)) candidates.push_back(nb.weight);
  for (std::size_t e : g.incident(w))
    if (g.vertex(g.other_end(e, w)).cell_dim >= g.vertex(w).cell_dim) candidates.push_back(&g.edges()[e].weight);

  Polynomial p = value;
  for (const Weight* c : candidates) {
    if (c->is_zero()) continue;
    while (p.degree() > 0) {
      auto q = divide_by_weight(p, *c);
      if (!q) break;
      out.factors.push_back(*c);
      p = std::move(*q);
    }
  }
  if (p.degree() == 0) {
    out.scalar = p.constant_term();
  } else {
    out.complete = false;
    out.rest = p;
  }
  return out;
}

struct RenderOptions {
  enum class Format { Dot, Svg } format = Format::Dot;
  std::optional<CohClass> decoration;
  std::string title;
};

struct Rendered {
  std::string text;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string fmt(double x) {
  if (std::abs(x) < 0.005) x = 0.0;  // no "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string weight_text(const Weight& w) { return Polynomial::from_weight(w).str(); }

inline std::vector<std::pair<double, double>> projection_for(const GkmGraph& g) {
  if (g.projection() && g.projection()->size() == g.rank()) return *g.projection();
  std::vector<std::pair<double, double>> p;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const double t = 3.141592653589793 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(g.rank(), 1));
    p.emplace_back(std::cos(t), std::sin(t));
  }
  return p;
}

inline std::pair<double, double> project(const std::vector<std::pair<double, double>>& proj,
                                         const std::vector<double>& v) {
  double x = 0, y = 0;
  for (std::size_t i = 0; i < v.size() && i < proj.size(); ++i) {
    x += v[i] * proj[i].first;
    y += v[i] * proj[i].second;
  }
  return {x, y};
}

/// Plane coordinates (y up): moment positions when every vertex has one,
/// otherwise layers by cell dimension.
inline std::vector<std::pair<double, double>> layout(const GkmGraph& g) {
  const auto& vs = g.vertices();
  const bool positioned = !vs.empty() && std::all_of(vs.begin(), vs.end(), [](const Vertex& v) { return v.position.has_value(); });
  std::vector<std::pair<double, double>> out;
  if (positioned) {
    const auto proj = projection_for(g);
    for (const auto& v : vs) {
      std::vector<double> p;
      for (const auto& c : *v.position) p.push_back(static_cast<double>(c));
      out.push_back(project(proj, p));
    }
    return out;
  }
  std::map<int, std::size_t> per_level, seen;
  for (const auto& v : vs) ++per_level[v.cell_dim];
  for (const auto& v : vs) {
    const auto k = seen[v.cell_dim]++;
    const double width = static_cast<double>(per_level[v.cell_dim] - 1);
    out.emplace_back(static_cast<double>(k) - width / 2.0, static_cast<double>(v.cell_dim / 2));
  }
  return out;
}

struct Bouquet {
  bool zero = true;
  Factorization f;
  std::string raw;
};

inline std::vector<Bouquet> bouquets(const GkmGraph& g, const CohClass& c, std::vector<std::string>& warnings) {
  std::vector<Bouquet> out(g.vertex_count());
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    const Polynomial& val = c.at(g.vertex(w).id);
    if (val.is_zero()) continue;
    out[w].zero = false;
    out[w].f = factor_restriction(val, g, w);
    if (!out[w].f.complete) {
      out[w].raw = val.str();
      warnings.push_back("restriction at " + g.vertex(w).id + " is not a product of weights; printed as text");
    }
  }
  return out;
}

inline std::string bouquet_text(const Bouquet& b) {
  if (!b.f.complete) return b.raw;
  std::string s;
  if (b.f.scalar != 1 || b.f.factors.empty()) s = to_string(b.f.scalar);
  for (const auto& w : b.f.factors) {
    if (!s.empty()) s += " * ";
    s += "(" + weight_text(w) + ")";
  }
  return s;
}

}  // namespace detail

inline Rendered render_dot(const GkmGraph& g, const RenderOptions& opt = {}) {
  Rendered r;
  const auto pos = detail::layout(g);
  std::vector<detail::Bouquet> bq;
  if (opt.decoration) bq = detail::bouquets(g, *opt.decoration, r.warnings);

  std::ostringstream os;
  os << "graph gkm {\n";
  if (!opt.title.empty()) os << "  label=\"" << opt.title << "\";\n";
  os << "  node [shape=circle, fontsize=10];\n";
  os << "  edge [fontsize=8];\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& v = g.vertex(i);
    os << "  \"" << v.id << "\" [label=\"" << v.id << "\\ndim " << v.cell_dim << "\", pos=\""
       << detail::fmt(pos[i].first) << "," << detail::fmt(pos[i].second) << "!\"";
    if (!bq.empty() && !bq[i].zero) os << ", xlabel=\"" << detail::bouquet_text(bq[i]) << "\"";
    os << "];\n";
  }
  for (const auto& e : g.edges())
    os << "  \"" << e.from << "\" -- \"" << e.to << "\" [label=\"" << detail::weight_text(e.weight) << "\"];\n";
  os << "}\n";
  r.text = os.str();
  return r;
}

inline Rendered render_svg(const GkmGraph& g, const RenderOptions& opt = {}) {
  Rendered r;
  const auto pos = detail::layout(g);
  std::vector<detail::Bouquet> bq;
  if (opt.decoration) bq = detail::bouquets(g, *opt.decoration, r.warnings);
  const auto proj = detail::projection_for(g);

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  if (!pos.empty()) {
    minx = maxx = pos[0].first;
    miny = maxy = pos[0].second;
  }
  for (const auto& [x, y] : pos) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1.0});
  const double size = 480.0, margin = 60.0;
  const double scale = size / span;
  auto sx = [&](double x) { return margin + (x - minx) * scale; };
  auto sy = [&](double y) { return margin + (maxy - y) * scale; };
  const double width = 2 * margin + (maxx - minx) * scale, height = 2 * margin + (maxy - miny) * scale;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width) << "\" height=\""
     << detail::fmt(height) << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  os << "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
        "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#c0392b\"/></marker></defs>\n";
  if (!opt.title.empty()) os << "  <text x=\"8\" y=\"16\">" << detail::xml_escape(opt.title) << "</text>\n";
  for (const auto& w : r.warnings) os << "  <!-- warning: " << detail::xml_escape(w) << " -->\n";

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    os << "  <line x1=\"" << detail::fmt(sx(pos[a].first)) << "\" y1=\"" << detail::fmt(sy(pos[a].second))
       << "\" x2=\"" << detail::fmt(sx(pos[b].first)) << "\" y2=\"" << detail::fmt(sy(pos[b].second))
       << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    if (bq.empty()) {
      os << "  <text x=\"" << detail::fmt((sx(pos[a].first) + sx(pos[b].first)) / 2) << "\" y=\""
         << detail::fmt((sy(pos[a].second) + sy(pos[b].second)) / 2) << "\" fill=\"#555\" font-size=\"8\">"
         << detail::xml_escape(detail::weight_text(g.edges()[e].weight)) << "</text>\n";
    }
  }

  const double arrow_len = 0.3 * size / std::max(1.0, std::sqrt(static_cast<double>(g.vertex_count())));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const double cx = sx(pos[i].first), cy = sy(pos[i].second);
    if (!bq.empty() && !bq[i].zero) {
      const auto& b = bq[i];
      if (b.f.complete) {
        for (const auto& w : b.f.factors) {
          std::vector<double> v;
          for (const auto& c : w.coeffs()) v.push_back(static_cast<double>(c));
          auto [dx, dy] = detail::project(proj, v);
          const double norm = std::hypot(dx, dy);
          if (norm < 1e-12) continue;
          os << "  <line x1=\"" << detail::fmt(cx) << "\" y1=\"" << detail::fmt(cy) << "\" x2=\""
             << detail::fmt(cx + arrow_len * dx / norm) << "\" y2=\"" << detail::fmt(cy - arrow_len * dy / norm)
             << "\" stroke=\"#c0392b\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        }
        if (b.f.scalar != 1 || b.f.factors.empty())
          os << "  <text x=\"" << detail::fmt(cx + 8) << "\" y=\"" << detail::fmt(cy + 14) << "\" fill=\"#c0392b\">"
             << detail::xml_escape(to_string(b.f.scalar)) << "</text>\n";
      } else {
        os << "  <text x=\"" << detail::fmt(cx + 8) << "\" y=\"" << detail::fmt(cy + 14) << "\" fill=\"#c0392b\">"
           << detail::xml_escape(b.raw) << "</text>\n";
      }
    }
    os << "  <circle cx=\"" << detail::fmt(cx) << "\" cy=\"" << detail::fmt(cy)
       << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
    os << "  <text x=\"" << detail::fmt(cx + 6) << "\" y=\"" << detail::fmt(cy - 6) << "\">"
       << detail::xml_escape(g.vertex(i).id) << "</text>\n";
  }
  os << "</svg>\n";
  r.text = os.str();
  return r;
}

inline Rendered render(const GkmGraph& g, const RenderOptions& opt = {}) {
  return opt.format == RenderOptions::Format::Svg ? render_svg(g, opt) : render_dot(g, opt);
}

}  // namespace gkm
