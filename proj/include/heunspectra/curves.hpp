#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace heunspectra {

struct Box {
  double u_min = 0, u_max = 1, v_min = 0, v_max = 1;
};

struct CurvePoint {
  double u = 0, v = 0, residual = 0;
};

using Polyline = std::vector<CurvePoint>;

struct CurveSet {
  std::vector<Polyline> polylines;  // closed loops repeat their first point
  double residual_bound = 0;
  Box box;
  int grid = 0;
  std::size_t point_count() const;
};

using Field = std::function<double(double, double)>;

// Marching squares on a grid x grid cell lattice; crossings refined by
// bisection along their edges until the bracket is below refine_tol.
CurveSet trace_implicit(const Field& f, const Box& box, int grid, double refine_tol = 1e-13);

struct NchoCurve {
  int L = 3;
  double eta = 0.5, a = 2;
};
struct AqrmCurve {
  int N = 1;
  double eta = 0.5;
};
struct LimitCurve {
  int L = 1;
  double eta = 0.5, t = 16;
};
using CurveModel = std::variant<NchoCurve, AqrmCurve, LimitCurve>;

// ncho: det of the constraint matrix in (x, y); aqrm: P_N((2g)^2, Delta^2)
// in (g, Delta); limit: q_L at finite t with a = 1 - L, r = 4g^2,
// k = Delta / (2g^2) in (g, Delta).
Field constraint_field(const CurveModel& model);
CurveSet constraint_curve(const CurveModel& model, const Box& box, int grid, double refine_tol = 1e-13);
std::string describe(const CurveModel& model);

double arc_length(const Polyline& line);
double total_arc_length(const CurveSet& c);

// Symmetric Hausdorff distance between the point clouds of two curve sets.
double hausdorff_distance(const CurveSet& a, const CurveSet& b);

std::string curves_csv(const CurveSet& c);
std::string curves_svg(const CurveSet& c, const std::string& metadata);

}  // namespace heunspectra
