#include "heunspectra/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "heunspectra/aqrm.hpp"
#include "heunspectra/confluence.hpp"
#include "heunspectra/errors.hpp"
#include "heunspectra/heun.hpp"
#include "heunspectra/io.hpp"
#include "heunspectra/parallel.hpp"
#include "heunspectra/roots.hpp"

namespace heunspectra {

std::size_t CurveSet::point_count() const {
  std::size_t n = 0;
  for (const auto& p : polylines) n += p.size();
  return n;
}

namespace {

void check_box(const Box& b) {
  if (!(b.u_min < b.u_max) || !(b.v_min < b.v_max) || !std::isfinite(b.u_min) || !std::isfinite(b.u_max) ||
      !std::isfinite(b.v_min) || !std::isfinite(b.v_max))
    throw InvalidBox("box must be a finite non-degenerate rectangle");
}

}  // namespace

CurveSet trace_implicit(const Field& f, const Box& box, int grid, double refine_tol) {
  check_box(box);
  if (grid < 16) throw InvalidParams("grid must be at least 16 per axis");
  if (!(refine_tol > 0)) throw InvalidParams("refine_tol must be positive");
  const int G = grid, nodes = G + 1;
  const double hu = (box.u_max - box.u_min) / G, hv = (box.v_max - box.v_min) / G;
  auto u_at = [&](int i) { return i == G ? box.u_max : box.u_min + i * hu; };
  auto v_at = [&](int j) { return j == G ? box.v_max : box.v_min + j * hv; };

  std::vector<double> val(static_cast<std::size_t>(nodes) * nodes);
  parallel_for(static_cast<std::size_t>(nodes), [&](std::size_t j) {
    for (int i = 0; i < nodes; ++i) val[j * nodes + i] = f(u_at(i), v_at(static_cast<int>(j)));
  });
  auto at = [&](int i, int j) { return val[static_cast<std::size_t>(j) * nodes + i]; };
  auto positive = [](double x) { return x > 0; };

  // Edge ids: horizontal (i,j)-(i+1,j) first, then vertical (i,j)-(i,j+1).
  const long h_count = static_cast<long>(G) * nodes;
  auto h_edge = [&](int i, int j) { return static_cast<long>(j) * G + i; };
  auto v_edge = [&](int i, int j) { return h_count + static_cast<long>(i) * G + j; };

  std::vector<std::array<long, 2>> segments;
  for (int j = 0; j < G; ++j)
    for (int i = 0; i < G; ++i) {
      const double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      if (!std::all_of(std::begin(c), std::end(c), [](double x) { return std::isfinite(x); })) continue;
      const long e[4] = {h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
      std::vector<long> cut;
      for (int k = 0; k < 4; ++k)
        if (positive(c[k]) != positive(c[(k + 1) % 4])) cut.push_back(e[k]);
      if (cut.size() == 2) {
        segments.push_back({cut[0], cut[1]});
      } else if (cut.size() == 4) {
        const double centre = f(u_at(i) + 0.5 * hu, v_at(j) + 0.5 * hv);
        if (positive(centre) == positive(c[0])) {
          segments.push_back({e[0], e[1]});
          segments.push_back({e[2], e[3]});
        } else {
          segments.push_back({e[0], e[3]});
          segments.push_back({e[1], e[2]});
        }
      }
    }

  std::map<long, std::vector<long>> adjacency;
  for (const auto& s : segments) {
    adjacency[s[0]].push_back(s[1]);
    adjacency[s[1]].push_back(s[0]);
  }
  std::vector<long> edge_ids;
  for (const auto& [id, nb] : adjacency) edge_ids.push_back(id);
  std::map<long, std::size_t> slot;
  for (std::size_t k = 0; k < edge_ids.size(); ++k) slot[edge_ids[k]] = k;

  std::vector<CurvePoint> crossing(edge_ids.size());
  parallel_for(edge_ids.size(), [&](std::size_t k) {
    const long id = edge_ids[k];
    double u0, v0, du = 0, dv = 0;
    if (id < h_count) {
      const int j = static_cast<int>(id / G), i = static_cast<int>(id % G);
      u0 = u_at(i);
      v0 = v_at(j);
      du = u_at(i + 1) - u0;
    } else {
      const long rel = id - h_count;
      const int i = static_cast<int>(rel / G), j = static_cast<int>(rel % G);
      u0 = u_at(i);
      v0 = v_at(j);
      dv = v_at(j + 1) - v0;
    }
    auto along = [&](double s) { return f(u0 + s * du, v0 + s * dv); };
    const double s = refine_root(along, 0, 1, refine_tol / std::max(std::abs(du), std::abs(dv)), 400);
    CurvePoint p{u0 + s * du, v0 + s * dv, 0};
    p.residual = std::abs(f(p.u, p.v));
    crossing[k] = p;
  });

  CurveSet out;
  out.box = box;
  out.grid = grid;
  std::vector<bool> used(edge_ids.size(), false);
  auto walk = [&](std::size_t start) {
    Polyline line;
    std::size_t cur = start;
    long prev = -1;
    used[cur] = true;
    line.push_back(crossing[cur]);
    for (;;) {
      const auto& nb = adjacency[edge_ids[cur]];
      long next = -1;
      for (long cand : nb)
        if (cand != prev && !used[slot[cand]]) {
          next = cand;
          break;
        }
      if (next < 0) {
        for (long cand : nb)
          if (cand == edge_ids[start] && cand != prev && line.size() > 2) {
            line.push_back(crossing[start]);
            break;
          }
        break;
      }
      prev = edge_ids[cur];
      cur = slot[next];
      used[cur] = true;
      line.push_back(crossing[cur]);
    }
    if (line.size() >= 2) out.polylines.push_back(std::move(line));
  };
  for (std::size_t k = 0; k < edge_ids.size(); ++k)
    if (!used[k] && adjacency[edge_ids[k]].size() == 1) walk(k);
  for (std::size_t k = 0; k < edge_ids.size(); ++k)
    if (!used[k]) walk(k);

  for (const auto& line : out.polylines)
    for (const auto& p : line) out.residual_bound = std::max(out.residual_bound, p.residual);
  return out;
}

Field constraint_field(const CurveModel& model) {
  if (const auto* m = std::get_if<NchoCurve>(&model)) {
    check_degree(m->L, m->a);
    const NchoCurve c = *m;
    return [c](double x, double y) {
      return constraint_continuant(xy_entries<double>(c.L, c.eta, c.a, x, y));
    };
  }
  if (const auto* m = std::get_if<AqrmCurve>(&model)) {
    if (m->N < 0) throw InvalidParams("N must be non-negative");
    const AqrmCurve c = *m;
    return [c](double g, double delta) {
      return constraint_poly_value<double>(c.N, c.eta, c.N, 4 * g * g, delta * delta);
    };
  }
  const LimitCurve c = std::get<LimitCurve>(model);
  if (c.L < 0) throw InvalidParams("L must be non-negative");
  if (!(c.t > 1)) throw InvalidParams("t must exceed 1");
  return [c](double g, double delta) {
    if (g == 0) return std::numeric_limits<double>::quiet_NaN();
    return q_tilde(c.L, c.eta, 1.0 - c.L, c.L, c.t, {4 * g * g, k_constraint_branch(std::abs(g), delta)});
  };
}

CurveSet constraint_curve(const CurveModel& model, const Box& box, int grid, double refine_tol) {
  check_box(box);
  if (std::holds_alternative<NchoCurve>(model) && !(box.u_min > 0 && box.v_min > 0 && box.v_max < 1))
    throw InvalidBox("constraint curves in (x, y) need x > 0 and 0 < y < 1");
  return trace_implicit(constraint_field(model), box, grid, refine_tol);
}

std::string describe(const CurveModel& model) {
  std::ostringstream s;
  if (const auto* m = std::get_if<NchoCurve>(&model))
    s << "ncho L=" << m->L << " eta=" << format_number(m->eta) << " a=" << format_number(m->a);
  else if (const auto* m = std::get_if<AqrmCurve>(&model))
    s << "aqrm N=" << m->N << " eta=" << format_number(m->eta);
  else {
    const auto& l = std::get<LimitCurve>(model);
    s << "limit L=" << l.L << " eta=" << format_number(l.eta) << " t=" << format_number(l.t);
  }
  return s.str();
}

double arc_length(const Polyline& line) {
  double s = 0;
  for (std::size_t k = 1; k < line.size(); ++k) s += std::hypot(line[k].u - line[k - 1].u, line[k].v - line[k - 1].v);
  return s;
}

double total_arc_length(const CurveSet& c) {
  double s = 0;
  for (const auto& line : c.polylines) s += arc_length(line);
  return s;
}

namespace {

std::vector<CurvePoint> cloud(const CurveSet& c) {
  std::vector<CurvePoint> pts;
  for (const auto& line : c.polylines) pts.insert(pts.end(), line.begin(), line.end());
  return pts;
}

double directed(const std::vector<CurvePoint>& from, const std::vector<CurvePoint>& to) {
  std::vector<double> nearest(from.size());
  parallel_for(from.size(), [&](std::size_t k) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : to) best = std::min(best, std::hypot(from[k].u - q.u, from[k].v - q.v));
    nearest[k] = best;
  });
  return nearest.empty() ? 0 : *std::max_element(nearest.begin(), nearest.end());
}

}  // namespace

double hausdorff_distance(const CurveSet& a, const CurveSet& b) {
  const auto pa = cloud(a), pb = cloud(b);
  if (pa.empty() || pb.empty()) return pa.empty() && pb.empty() ? 0 : std::numeric_limits<double>::infinity();
  return std::max(directed(pa, pb), directed(pb, pa));
}

std::string curves_csv(const CurveSet& c) {
  std::ostringstream s;
  s << "curve_id,point_index,u,v,residual\n";
  for (std::size_t id = 0; id < c.polylines.size(); ++id)
    for (std::size_t k = 0; k < c.polylines[id].size(); ++k) {
      const auto& p = c.polylines[id][k];
      s << id << ',' << k << ',' << format_number(p.u) << ',' << format_number(p.v) << ','
        << format_number(p.residual) << '\n';
    }
  return s.str();
}

std::string curves_svg(const CurveSet& c, const std::string& metadata) {
  const double width = 800, height = 800, margin = 40;
  const Box& b = c.box;
  auto px = [&](double u) { return margin + (u - b.u_min) / (b.u_max - b.u_min) * (width - 2 * margin); };
  auto py = [&](double v) { return height - margin - (v - b.v_min) / (b.v_max - b.v_min) * (height - 2 * margin); };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<!-- " << metadata << " -->\n";
  s << "<!-- box u=[" << format_number(b.u_min) << ", " << format_number(b.u_max) << "] v=["
    << format_number(b.v_min) << ", " << format_number(b.v_max) << "] grid=" << c.grid
    << " residual_bound=" << format_number(c.residual_bound) << " -->\n";
  s << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin << "\" height=\""
    << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << margin << "\" y=\"" << height - 10 << "\" font-size=\"12\">" << format_number(b.u_min)
    << "</text>\n";
  s << "<text x=\"" << width - margin << "\" y=\"" << height - 10 << "\" font-size=\"12\" text-anchor=\"end\">"
    << format_number(b.u_max) << "</text>\n";
  s << "<text x=\"5\" y=\"" << height - margin << "\" font-size=\"12\">" << format_number(b.v_min) << "</text>\n";
  s << "<text x=\"5\" y=\"" << margin << "\" font-size=\"12\">" << format_number(b.v_max) << "</text>\n";
  s.setf(std::ios::fixed);
  s.precision(3);
  for (const auto& line : c.polylines) {
    s << "<path fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" d=\"";
    for (std::size_t k = 0; k < line.size(); ++k) s << (k == 0 ? "M" : " L") << px(line[k].u) << ',' << py(line[k].v);
    s << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace heunspectra
